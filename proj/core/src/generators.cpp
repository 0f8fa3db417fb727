#include "crdfa/generators.hpp"

#include <string>
#include <vector>

#include "crdfa/error.hpp"

namespace crdfa {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Automaton cerny(std::size_t n) {
  if (n < 1) throw InvalidInput("cerny needs n >= 1");
  std::vector<State> table(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    table[q] = static_cast<State>(q);
    table[n + q] = static_cast<State>((q + 1) % n);
  }
  table[0] = static_cast<State>(1 % n);
  return Automaton(n, 2, std::move(table));
}

Automaton figure1() {
  return Automaton::from_rows({
      {0, 1, 2, 3, 4, 2},
      {1, 2, 3, 4, 5, 0},
  });
}

namespace {

constexpr State kFigure2Letter[12] = {10, 1, 2, 8, 4, 5, 10, 9, 3, 7, 6, 11};

}  // namespace

Automaton figure2() { return figure2_style(12); }

Automaton figure2_style(std::size_t n) {
  if (n < 12) throw InvalidInput("figure2_style needs n >= 12, got " + std::to_string(n));
  std::vector<State> table(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    table[q] = q < 12 ? kFigure2Letter[q] : static_cast<State>(q);
    table[n + q] = static_cast<State>((q + 1) % n);
  }
  return Automaton(n, 2, std::move(table));
}

Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw InvalidInput("random automaton needs n >= 1 and k >= 1");
  SplitMix64 rng(seed);
  std::vector<State> table(n * k);
  for (State& target : table) target = static_cast<State>(rng.next() % n);
  return Automaton(n, k, std::move(table));
}

}  // namespace crdfa
