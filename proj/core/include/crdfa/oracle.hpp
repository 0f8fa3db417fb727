#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crdfa/automaton.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

namespace crdfa {

/// Largest automaton the exhaustive routines accept.
inline constexpr std::size_t kOracleMaxStates = 24;

/// Exhaustive map of the subsets reachable from Q, with shortest lengths
/// and a BFS parent for word reconstruction. Subsets are n-bit masks.
class OracleAtlas {
 public:
  std::size_t states() const noexcept { return states_; }
  std::size_t letters() const noexcept { return letters_; }
  /// Number of reachable non-empty subsets, Q included.
  std::size_t reachable_count() const noexcept { return reachable_count_; }

  bool reachable(std::uint32_t mask) const noexcept { return distance_[mask] >= 0; }
  bool reachable(const StateSet& s) const { return reachable(static_cast<std::uint32_t>(s.to_mask())); }
  /// Shortest word length from Q, if reachable.
  std::optional<std::size_t> distance(const StateSet& s) const;
  /// A shortest word w with delta(Q, w) = S, if reachable.
  std::optional<Word> word_to(const StateSet& s) const;
  /// BFS parent of a reachable mask other than Q.
  std::pair<std::uint32_t, Letter> parent(std::uint32_t mask) const noexcept {
    return {parent_[mask], parent_letter_[mask]};
  }

 private:
  friend OracleAtlas build_atlas(const Automaton& automaton);

  std::size_t states_ = 0;
  std::size_t letters_ = 0;
  std::size_t reachable_count_ = 0;
  std::vector<std::int32_t> distance_;
  std::vector<std::uint32_t> parent_;
  std::vector<Letter> parent_letter_;
};

/// Forward BFS over the power set from Q. Throws CapacityError above
/// kOracleMaxStates states.
OracleAtlas build_atlas(const Automaton& automaton);

bool oracle_is_completely_reachable(const OracleAtlas& atlas);

/// Unreachable sets of the largest unreachable size, in increasing mask
/// order. Empty iff completely reachable.
std::vector<StateSet> oracle_witnesses(const OracleAtlas& atlas);

/// Shortest properly extending word for S by backward BFS over valid
/// single-letter predecessors, or nullopt if none exists.
std::optional<Word> oracle_shortest_extending(const Automaton& automaton, const StateSet& s);

/// Length of the shortest reset word, if any singleton is reachable.
std::optional<std::size_t> oracle_reset_threshold(const OracleAtlas& atlas);

/// Maximum of sum(2 p_i - 1) over partitions of n into parts p_i <= cap,
/// by dynamic programming.
long oracle_max_laminar(long n, long cap);

}  // namespace crdfa
