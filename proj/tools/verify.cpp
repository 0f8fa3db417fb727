#include <algorithm>
#include <cmath>
#include <sstream>

#include "cli.hpp"
#include "crdfa/extension.hpp"
#include "crdfa/generators.hpp"
#include "crdfa/oracle.hpp"
#include "crdfa/witness.hpp"

namespace crdfa::cli {

namespace {

// Every non-empty proper subset up to this many states, a fixed sample above.
constexpr std::size_t kExhaustiveStates = 12;
constexpr std::size_t kSampleSize = 2048;

std::vector<StateSet> subsets_to_check(std::size_t n) {
  std::vector<StateSet> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (n <= kExhaustiveStates) {
    for (std::uint64_t mask = 1; mask < full; ++mask) out.push_back(StateSet::from_mask(n, mask));
    return out;
  }
  SplitMix64 rng(0);
  while (out.size() < kSampleSize) {
    const std::uint64_t mask = rng.next() & full;
    if (mask != 0 && mask != full) out.push_back(StateSet::from_mask(n, mask));
  }
  return out;
}

class Checker {
 public:
  void expect(const std::string& name, bool ok, const std::string& detail) {
    auto it = std::find_if(results_.begin(), results_.end(), [&](const CheckResult& r) { return r.name == name; });
    if (it == results_.end()) {
      results_.push_back({name, true, {}});
      it = results_.end() - 1;
    }
    if (!ok && it->passed) {
      it->passed = false;
      it->detail = detail;
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string sets_string(const std::vector<StateSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(sets[i]);
  }
  return out + "]";
}

}  // namespace

std::vector<CheckResult> verify(const Automaton& automaton) {
  const std::size_t n = automaton.states();
  const OracleAtlas atlas = build_atlas(automaton);
  const bool reachable = oracle_is_completely_reachable(atlas);
  const auto expected = oracle_witnesses(atlas);
  Checker check;

  const auto witness = find_witness(automaton);
  check.expect("complete-reachability", witness.has_value() != reachable,
               witness ? "polynomial: witness " + to_string(*witness) + ", oracle: completely reachable"
                       : "polynomial: completely reachable, oracle: not");
  if (witness) {
    check.expect("witness", std::find(expected.begin(), expected.end(), *witness) != expected.end(),
                 to_string(*witness) + " is not an oracle witness");
  }

  auto all = find_all_witnesses(automaton);
  std::sort(all.begin(), all.end());
  check.expect("all-witnesses", all == expected, "polynomial " + sets_string(all) + " vs oracle " + sets_string(expected));

  for (const StateSet& w : expected) {
    check.expect("witness-candidates", is_witness_candidate(automaton, w), to_string(w) + " rejected as candidate");
  }

  if (!reachable) return check.take();

  ExtendingWordFinder finder(automaton);
  for (const StateSet& s : subsets_to_check(n)) {
    const auto found = finder.find(s);
    check.expect("extending-words", found && is_properly_extending(automaton, s, found->word),
                 "no properly extending word for " + to_string(s));

    const Word short_word = find_short_properly_extending_word(automaton, s);
    const long bound = max_nested_boxes_capped(static_cast<long>(n), static_cast<long>(n - s.size()));
    check.expect("short-extending-words", is_properly_extending(automaton, s, short_word),
                 "short word does not extend " + to_string(s));
    check.expect("short-extension-bound", static_cast<long>(short_word.size()) <= bound,
                 to_string(s) + ": length " + std::to_string(short_word.size()) + " > " + std::to_string(bound));
    if (const auto shortest = oracle_shortest_extending(automaton, s)) {
      check.expect("short-extension-vs-oracle", short_word.size() >= shortest->size(),
                   to_string(s) + ": shorter than the oracle optimum");
    }

    const Word reach = reach_word(automaton, s);
    const auto budget = static_cast<std::size_t>(
        std::ceil(extension_length_budget(static_cast<long>(n), static_cast<long>(s.size()))));
    check.expect("reach-words", image(automaton, automaton.all_states(), reach) == s,
                 "reaching word misses " + to_string(s));
    check.expect("reach-bound", reach.size() <= budget,
                 to_string(s) + ": length " + std::to_string(reach.size()) + " > " + std::to_string(budget));
    check.expect("reach-vs-oracle", reach.size() >= atlas.distance(s).value_or(0),
                 to_string(s) + ": shorter than the oracle distance");
  }

  if (n >= 2) {
    const Word reset = reset_word(automaton);
    const auto threshold = oracle_reset_threshold(atlas);
    check.expect("reset-word", image(automaton, automaton.all_states(), reset).size() == 1, "image is not a singleton");
    check.expect("reset-vs-threshold", threshold && reset.size() >= *threshold,
                 "length " + std::to_string(reset.size()) + " below the oracle threshold");
    if (n >= 3) {
      const auto bound = static_cast<std::size_t>(std::ceil(extension_length_budget(static_cast<long>(n), 2))) + 1;
      check.expect("reset-bound", reset.size() <= bound,
                   "length " + std::to_string(reset.size()) + " > " + std::to_string(bound));
    }
  }
  return check.take();
}

}  // namespace crdfa::cli
