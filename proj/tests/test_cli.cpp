#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "crdfa/generators.hpp"
#include "crdfa/io.hpp"
#include "support.hpp"

using namespace crdfa;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(CRDFA_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check") {
  const auto fig1 = invoke({"check", fixture("fig1.dfa")});
  CHECK(fig1.code == 1);
  CHECK(fig1.out == "witness: {1,2,4,5}\n");
  const auto fig2 = invoke({"check", fixture("fig2.dfa")});
  CHECK(fig2.code == 0);
  CHECK(fig2.out == "completely-reachable\n");
}

TEST_CASE("witnesses") {
  const auto fig1 = invoke({"witnesses", fixture("fig1.dfa")});
  CHECK(fig1.code == 1);
  CHECK(fig1.out == "{1,2,4,5}\n{0,2,3,5}\n{0,1,3,4}\n");
  const auto fig2 = invoke({"witnesses", fixture("fig2.dfa")});
  CHECK(fig2.code == 0);
  CHECK(fig2.out.empty());
}

TEST_CASE("extend") {
  const auto plain = invoke({"extend", fixture("fig2.dfa"), "--set", "0,10"});
  CHECK(plain.code == 0);
  CHECK(plain.out == "word: abb\nlength: 3\npredecessor: {0,3,6}\n");
  const auto shortened = invoke({"extend", fixture("fig2.dfa"), "--set", "0,10", "--short"});
  CHECK(shortened.code == 0);
  CHECK(shortened.out.find("word: ") == 0);

  const auto candidate = invoke({"extend", fixture("fig1.dfa"), "--set", "1,2,4,5"});
  CHECK(candidate.code == 1);
  CHECK(candidate.out == "none: {1,2,4,5} is a witness candidate\n");
  const auto blocked = invoke({"extend", fixture("fig1.dfa"), "--set", "1,2", "--short"});
  CHECK(blocked.code == 1);
  CHECK(blocked.out == "not completely reachable; witness: {1,2,4,5}\n");
  CHECK(invoke({"extend", fixture("fig1.dfa"), "--set", "0,1,2,3,4,5"}).code == 64);
}

TEST_CASE("reach and reset") {
  const auto reach = invoke({"reach", fixture("cerny4.dfa"), "--set", "0"});
  CHECK(reach.code == 0);
  CHECK(reach.out.find("word: ") == 0);
  CHECK(invoke({"reach", fixture("cerny4.dfa"), "--set", "0,1,2,3"}).out == "word: ε\nlength: 0\n");

  const auto reset = invoke({"reset", fixture("cerny4.dfa")});
  CHECK(reset.code == 0);
  const auto length_at = reset.out.find("length: ");
  REQUIRE(length_at != std::string::npos);
  const int length = std::stoi(reset.out.substr(length_at + 8));
  CHECK(length >= 9);
  CHECK(length <= 12);
  CHECK(invoke({"reset", fixture("fig1.dfa")}).code == 1);
}

TEST_CASE("oracle") {
  const auto summary = invoke({"oracle", fixture("cerny4.dfa")});
  CHECK(summary.code == 0);
  CHECK(summary.out ==
        "states: 4\nletters: 2\nreachable-subsets: 15/15\ncompletely-reachable: yes\nreset-threshold: 9\n");

  const auto fig1 = invoke({"oracle", fixture("fig1.dfa")});
  CHECK(fig1.code == 1);
  CHECK(fig1.out.find("witness: {0,1,3,4}\nwitness: {0,2,3,5}\nwitness: {1,2,4,5}\n") != std::string::npos);

  const auto subset = invoke({"oracle", fixture("fig2.dfa"), "--subset", "0,10"});
  CHECK(subset.code == 0);
  CHECK(subset.out.find("reachable: yes\n") != std::string::npos);
  CHECK(subset.out.find("shortest-extending-length: 3\n") != std::string::npos);
}

TEST_CASE("verify") {
  const auto fig1 = invoke({"verify", fixture("fig1.dfa")});
  CHECK(fig1.code == 0);
  CHECK(fig1.out.find("FAIL") == std::string::npos);
  const auto fig2 = invoke({"verify", fixture("fig2.dfa")});
  CHECK(fig2.code == 0);
  CHECK(fig2.out.find("PASS reset-bound\n") != std::string::npos);
}

TEST_CASE("verify passes on the reference families") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const auto& r : cli::verify(cerny(n))) CHECK_MESSAGE(r.passed, "cerny ", n, " ", r.name, ": ", r.detail);
  }
  for (std::size_t n = 12; n <= 16; ++n) {
    for (const auto& r : cli::verify(figure2_style(n))) {
      CHECK_MESSAGE(r.passed, "fig2x ", n, " ", r.name, ": ", r.detail);
    }
  }
}

TEST_CASE("bounds") {
  const auto b = invoke({"bounds", "--n", "12", "--size", "2"});
  CHECK(b.code == 0);
  CHECK(b.out == "max-nested-boxes: 22\nlength-budget: 211.17\nlength-budget-ceil: 212\n");
  CHECK(invoke({"bounds", "--n", "12", "--size", "12"}).code == 64);
}

TEST_CASE("gen") {
  CHECK(invoke({"gen", "cerny", "4"}).out == "dfa 4 2\n1 1 2 3\n1 2 3 0\n");
  CHECK(invoke({"gen", "fig1"}).out == "dfa 6 2\n0 1 2 3 4 2\n1 2 3 4 5 0\n");
  CHECK(invoke({"gen", "random", "3", "2", "--seed", "0"}).out == "dfa 3 2\n1 0 1\n1 1 0\n");
  CHECK(invoke({"gen", "random", "3", "2", "0"}).out == "dfa 3 2\n1 0 1\n1 1 0\n");
  const auto bad = invoke({"gen", "dodecahedron"});
  CHECK(bad.code == 64);
  CHECK_FALSE(bad.err.empty());
  CHECK(invoke({"gen", "cerny", "0"}).code == 64);
  CHECK(invoke({"gen", "cerny"}).code == 64);
}

TEST_CASE("gen output round-trips byte for byte") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"gen", "fig1"}, {"gen", "fig2"}, {"gen", "cerny", "9"}, {"gen", "random", "7", "3", "--seed", "5"}}) {
    const std::string text = invoke(args).out;
    CHECK(serialize_automaton(parse_automaton(text)) == text);
  }
}

TEST_CASE("usage and data errors") {
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"check"}).code == 64);
  CHECK(invoke({"check", fixture("missing.dfa")}).code == 65);
  CHECK(invoke({"extend", fixture("fig2.dfa"), "--set", "0,0"}).code == 64);
  CHECK(invoke({"extend", fixture("fig2.dfa"), "--set", "12"}).code == 64);
  CHECK(invoke({"check", fixture("malformed.dfa")}).code == 65);
  CHECK(invoke({"check", fixture("malformed.dfa")}).err.find("malformed.dfa:3:") != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"check", fixture("fig1.dfa")},
      {"witnesses", fixture("fig1.dfa")},
      {"extend", fixture("fig2.dfa"), "--set", "3,5,7"},
      {"extend", fixture("fig2.dfa"), "--set", "3,5,7", "--short"},
      {"reach", fixture("fig2.dfa"), "--set", "4"},
      {"reset", fixture("fig2.dfa")},
      {"oracle", fixture("fig2.dfa")},
  };
  for (const auto& args : commands) {
    const auto first = invoke(args);
    const auto second = invoke(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
