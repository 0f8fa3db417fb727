#pragma once

#include <cstdint>
#include <vector>

#include "crdfa/automaton.hpp"
#include "crdfa/generators.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

namespace crdfa::test {

/// figure1() plus a third letter sending every state to 0.
inline Automaton figure1_with_reset_letter() {
  return Automaton::from_rows({
      {0, 1, 2, 3, 4, 2},
      {1, 2, 3, 4, 5, 0},
      {0, 0, 0, 0, 0, 0},
  });
}

struct SweepInstance {
  std::size_t n;
  std::size_t k;
  std::uint64_t seed;
};

/// Instance i of the seeded random sweep: n in [2, 10], k in [1, 3].
inline SweepInstance sweep_instance(std::size_t i) {
  return {2 + i % 9, 1 + (i / 9) % 3, static_cast<std::uint64_t>(i)};
}

inline Automaton sweep_automaton(std::size_t i) {
  const auto inst = sweep_instance(i);
  return random_automaton(inst.n, inst.k, inst.seed);
}

/// delta(q, w) by direct table lookups.
inline State run(const Automaton& a, State q, const std::vector<Letter>& w) {
  for (Letter x : w) q = a.row(x)[q];
  return q;
}

/// Number of states p with delta(p, w) == q, by enumeration.
inline std::size_t preimage_count(const Automaton& a, State q, const std::vector<Letter>& w) {
  std::size_t count = 0;
  for (State p = 0; p < a.states(); ++p) count += run(a, p, w) == q ? 1 : 0;
  return count;
}

/// Brute-force properly-extending test: every state of S has a preimage
/// under w and at least one has two.
inline bool brute_properly_extending(const Automaton& a, const StateSet& s, const Word& w) {
  const auto letters = w.letters();
  bool grows = false;
  bool valid = true;
  s.for_each([&](State q) {
    const auto c = preimage_count(a, q, letters);
    valid = valid && c >= 1;
    grows = grows || c >= 2;
  });
  return valid && grows;
}

inline std::vector<StateSet> all_proper_subsets(std::size_t n) {
  std::vector<StateSet> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) out.push_back(StateSet::from_mask(n, mask));
  return out;
}

}  // namespace crdfa::test
