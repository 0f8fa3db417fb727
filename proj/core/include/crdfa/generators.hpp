#pragma once

#include <cstddef>
#include <cstdint>

#include "crdfa/automaton.hpp"

namespace crdfa {

/// splitmix64; identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// a: 0 -> 1, identity elsewhere; b: i -> i + 1 mod n.
Automaton cerny(std::size_t n);

/// Six states, not completely reachable: three witnesses of size 4.
Automaton figure1();

/// Twelve states, binary, completely reachable.
Automaton figure2();

/// b is the n-cycle; a acts on states 0..11 as in figure2() and fixes the
/// rest. Requires n >= 12; figure2_style(12) == figure2().
Automaton figure2_style(std::size_t n);

/// delta(q, a) = next() mod n, filled letter-major then state-major.
Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace crdfa
