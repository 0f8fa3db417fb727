#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "crdfa/error.hpp"
#include "crdfa/extension.hpp"
#include "crdfa/generators.hpp"
#include "crdfa/io.hpp"
#include "crdfa/oracle.hpp"
#include "crdfa/witness.hpp"

namespace crdfa::cli {

namespace {

// Thrown for bad arguments that CLI11 cannot catch on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File missing or unreadable.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Automaton load(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return parse_automaton(buffer.str());
  } catch (const ParseError& e) {
    throw DataError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

StateSet subset_arg(const std::string& text, const Automaton& automaton) {
  try {
    return parse_subset(text, automaton.states());
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
}

void print_word(std::ostream& out, const Automaton& automaton, const Word& w) {
  out << "word: " << format_word(w, automaton.letters()) << '\n';
  out << "length: " << w.size() << '\n';
}

// Prints the witness and returns kWitness when the automaton is not
// completely reachable.
std::optional<int> require_completely_reachable(const Automaton& automaton, std::ostream& out) {
  if (const auto witness = find_witness(automaton)) {
    out << "not completely reachable; witness: " << to_string(*witness) << '\n';
    return kWitness;
  }
  return std::nullopt;
}

int cmd_check(const std::string& file, std::ostream& out) {
  const Automaton automaton = load(file);
  if (const auto witness = find_witness(automaton)) {
    out << "witness: " << to_string(*witness) << '\n';
    return kWitness;
  }
  out << "completely-reachable\n";
  return kReachable;
}

int cmd_witnesses(const std::string& file, std::ostream& out) {
  const Automaton automaton = load(file);
  const auto witnesses = find_all_witnesses(automaton);
  for (const StateSet& w : witnesses) out << to_string(w) << '\n';
  return witnesses.empty() ? kReachable : kWitness;
}

int cmd_extend(const std::string& file, const std::string& set_text, bool use_short, std::ostream& out) {
  const Automaton automaton = load(file);
  const StateSet s = subset_arg(set_text, automaton);
  if (s.is_full()) throw UsageError("--set must be a proper subset of the states");

  Word w;
  if (use_short) {
    if (auto code = require_completely_reachable(automaton, out)) return *code;
    w = find_short_properly_extending_word(automaton, s);
  } else {
    try {
      auto found = find_properly_extending_word(automaton, s);
      if (!found) {
        out << "none: " << to_string(s) << " is a witness candidate\n";
        return kWitness;
      }
      w = std::move(*found);
    } catch (const AssumptionViolated& e) {
      out << "none: superset " << to_string(e.candidate()) << " is a witness candidate\n";
      return kWitness;
    }
  }
  print_word(out, automaton, w);
  out << "predecessor: " << to_string(preimage(automaton, s, w)) << '\n';
  return kReachable;
}

int cmd_reach(const std::string& file, const std::string& set_text, std::ostream& out) {
  const Automaton automaton = load(file);
  const StateSet s = subset_arg(set_text, automaton);
  if (auto code = require_completely_reachable(automaton, out)) return *code;
  print_word(out, automaton, reach_word(automaton, s));
  return kReachable;
}

int cmd_reset(const std::string& file, std::ostream& out) {
  const Automaton automaton = load(file);
  if (auto code = require_completely_reachable(automaton, out)) return *code;
  print_word(out, automaton, reset_word(automaton));
  return kReachable;
}

int cmd_oracle(const std::string& file, const std::string& subset_text, std::ostream& out) {
  const Automaton automaton = load(file);
  if (automaton.states() > kOracleMaxStates) {
    throw UsageError("oracle supports at most " + std::to_string(kOracleMaxStates) + " states");
  }
  const OracleAtlas atlas = build_atlas(automaton);

  if (!subset_text.empty()) {
    const StateSet s = subset_arg(subset_text, automaton);
    out << "subset: " << to_string(s) << '\n';
    if (const auto word = atlas.word_to(s)) {
      out << "reachable: yes\n";
      out << "distance: " << word->size() << '\n';
      out << "word: " << format_word(*word, automaton.letters()) << '\n';
    } else {
      out << "reachable: no\n";
    }
    if (s.is_full()) {
      out << "shortest-extending: n/a\n";
    } else if (const auto ext = oracle_shortest_extending(automaton, s)) {
      out << "shortest-extending: " << format_word(*ext, automaton.letters()) << '\n';
      out << "shortest-extending-length: " << ext->size() << '\n';
    } else {
      out << "shortest-extending: none\n";
    }
    return kReachable;
  }

  const std::size_t subsets = (std::size_t{1} << automaton.states()) - 1;
  const bool complete = oracle_is_completely_reachable(atlas);
  out << "states: " << automaton.states() << '\n';
  out << "letters: " << automaton.letters() << '\n';
  out << "reachable-subsets: " << atlas.reachable_count() << '/' << subsets << '\n';
  out << "completely-reachable: " << (complete ? "yes" : "no") << '\n';
  for (const StateSet& w : oracle_witnesses(atlas)) out << "witness: " << to_string(w) << '\n';
  if (const auto threshold = oracle_reset_threshold(atlas)) {
    out << "reset-threshold: " << *threshold << '\n';
  } else {
    out << "reset-threshold: none\n";
  }
  return complete ? kReachable : kWitness;
}

int cmd_verify(const std::string& file, std::ostream& out) {
  const Automaton automaton = load(file);
  if (automaton.states() > kOracleMaxStates) {
    throw UsageError("verify supports at most " + std::to_string(kOracleMaxStates) + " states");
  }
  const auto results = verify(automaton);
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << '\n';
    } else {
      out << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  out << "verify: " << passed << '/' << results.size() << " checks passed\n";
  return passed == results.size() ? kReachable : kVerifyFailed;
}

int cmd_bounds(long n, long size, std::ostream& out) {
  if (n < 2 || size < 1 || size > n - 1) throw UsageError("bounds needs --n >= 2 and 1 <= --size <= n - 1");
  const BoundBudget budget = bound_budget(n, size);
  std::ostringstream total;
  total << std::fixed << std::setprecision(2) << budget.total;
  out << "max-nested-boxes: " << budget.per_step << '\n';
  out << "length-budget: " << total.str() << '\n';
  out << "length-budget-ceil: " << static_cast<long>(std::ceil(budget.total)) << '\n';
  return kReachable;
}

int cmd_gen(const std::string& kind, const std::vector<std::uint64_t>& params, std::uint64_t seed, std::ostream& out) {
  out << serialize_automaton(generate(kind, params, seed));
  return kReachable;
}

}  // namespace

Automaton generate(std::string_view kind, std::span<const std::uint64_t> params, std::uint64_t seed) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw UsageError("gen " + std::string(kind) + ": wrong number of parameters");
    }
  };
  try {
    if (kind == "cerny") {
      arity(1, 1);
      return cerny(params[0]);
    }
    if (kind == "fig1") {
      arity(0, 0);
      return figure1();
    }
    if (kind == "fig2") {
      arity(0, 0);
      return figure2();
    }
    if (kind == "fig2x") {
      arity(1, 1);
      return figure2_style(params[0]);
    }
    if (kind == "random") {
      arity(2, 3);
      return random_automaton(params[0], params[1], params.size() == 3 ? params[2] : seed);
    }
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown generator '" + std::string(kind) + "' (cerny, fig1, fig2, fig2x, random)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete reachability of deterministic finite automata", "crdfa"};
  app.require_subcommand(1);

  std::string file;
  std::string set_text;
  bool use_short = false;
  long bound_n = 0;
  long bound_size = 0;
  std::string gen_kind;
  std::vector<std::uint64_t> gen_params;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Decide complete reachability; print a witness if there is one");
  check->add_option("file", file, "Automaton file ('-' for stdin)")->required();

  auto* witnesses = app.add_subcommand("witnesses", "Print every witness, one per line");
  witnesses->add_option("file", file, "Automaton file")->required();

  auto* extend = app.add_subcommand("extend", "Find a properly extending word for a subset");
  extend->add_option("file", file, "Automaton file")->required();
  extend->add_option("--set", set_text, "Subset, e.g. 0,10")->required();
  extend->add_flag("--short", use_short, "Use the single-trace search with the length guarantee");

  auto* reach = app.add_subcommand("reach", "Find a word whose image of Q is the subset");
  reach->add_option("file", file, "Automaton file")->required();
  reach->add_option("--set", set_text, "Subset, e.g. 0,10")->required();

  auto* reset = app.add_subcommand("reset", "Find a reset word");
  reset->add_option("file", file, "Automaton file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive power-set analysis (at most 24 states)");
  oracle->add_option("file", file, "Automaton file")->required();
  oracle->add_option("--subset", set_text, "Report exact results for one subset");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the polynomial algorithms against the oracle");
  verify_cmd->add_option("file", file, "Automaton file")->required();

  auto* bounds = app.add_subcommand("bounds", "Print the length bounds for a subset size");
  bounds->add_option("--n", bound_n, "Number of states")->required();
  bounds->add_option("--size", bound_size, "Subset size")->required();

  auto* gen = app.add_subcommand("gen", "Write a generated automaton to stdout");
  gen->add_option("kind", gen_kind, "cerny N | fig1 | fig2 | fig2x N | random N K [SEED]")->required();
  gen->add_option("params", gen_params, "Generator parameters");
  gen->add_option("--seed", seed, "Seed for the random generator");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kReachable;
  } catch (const CLI::ParseError& e) {
    err << "crdfa: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*witnesses) return cmd_witnesses(file, out);
    if (*extend) return cmd_extend(file, set_text, use_short, out);
    if (*reach) return cmd_reach(file, set_text, out);
    if (*reset) return cmd_reset(file, out);
    if (*oracle) return cmd_oracle(file, set_text, out);
    if (*verify_cmd) return cmd_verify(file, out);
    if (*bounds) return cmd_bounds(bound_n, bound_size, out);
    if (*gen) return cmd_gen(gen_kind, gen_params, seed, out);
  } catch (const UsageError& e) {
    err << "crdfa: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "crdfa: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "crdfa: internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << "crdfa: no command\n";
  return kUsage;
}

}  // namespace crdfa::cli
