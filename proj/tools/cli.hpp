#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crdfa/automaton.hpp"

namespace crdfa::cli {

enum ExitCode : int {
  kReachable = 0,
  kWitness = 1,
  kVerifyFailed = 2,
  kInternal = 3,
  kUsage = 64,
  kDataError = 65,
};

/// Runs one command line (without the program name). Everything meant for
/// the user goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a named automaton: "cerny N", "fig1", "fig2", "fig2x N",
/// "random N K" (seeded by `seed`).
Automaton generate(std::string_view kind, std::span<const std::uint64_t> params, std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Cross-checks the polynomial algorithms against the exhaustive oracle.
/// Throws CapacityError when the automaton is too large for the oracle.
std::vector<CheckResult> verify(const Automaton& automaton);

}  // namespace crdfa::cli
