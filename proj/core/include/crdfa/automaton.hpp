#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

namespace crdfa {

/// Complete deterministic semi-automaton over states 0..n-1 and letters
/// 0..k-1. The transition table is stored letter-major; the inverse
/// relation of every letter is built once at construction.
class Automaton {
 public:
  /// `table[a * n + q]` is the successor of q under a. Throws InvalidInput
  /// when n or k is zero, the table has the wrong size, or an entry is out
  /// of range.
  Automaton(std::size_t states, std::size_t letters, std::vector<State> table);
  /// One row per letter.
  static Automaton from_rows(const std::vector<std::vector<State>>& rows);

  std::size_t states() const noexcept { return states_; }
  std::size_t letters() const noexcept { return letters_; }

  State next(State q, Letter a) const noexcept { return table_[a * states_ + q]; }
  std::span<const State> row(Letter a) const noexcept {
    return {table_.data() + a * states_, states_};
  }
  /// States mapped onto q by a, in increasing order.
  std::span<const State> inverse(State q, Letter a) const noexcept {
    const std::size_t i = a * states_ + q;
    return {inverse_states_.data() + inverse_offsets_[i], inverse_offsets_[i + 1] - inverse_offsets_[i]};
  }
  /// The image of Q under a.
  const StateSet& letter_image(Letter a) const noexcept { return letter_images_[a]; }
  bool is_permutation(Letter a) const noexcept { return letter_images_[a].is_full(); }

  StateSet all_states() const { return StateSet::full(states_); }
  StateSet no_states() const { return StateSet(states_); }

  bool operator==(const Automaton& other) const noexcept {
    return states_ == other.states_ && letters_ == other.letters_ && table_ == other.table_;
  }

 private:
  std::size_t states_;
  std::size_t letters_;
  std::vector<State> table_;
  std::vector<std::size_t> inverse_offsets_;
  std::vector<State> inverse_states_;
  std::vector<StateSet> letter_images_;
};

// Throw InvalidInput on a universe mismatch or an out-of-range letter.
void check_set(const Automaton& automaton, const StateSet& s);
void check_word(const Automaton& automaton, const Word& w);

/// delta(S, a)
StateSet image(const Automaton& automaton, const StateSet& s, Letter a);
/// delta(S, w), applied left to right.
StateSet image(const Automaton& automaton, const StateSet& s, const Word& w);

/// delta^{-1}(S, a)
StateSet preimage(const Automaton& automaton, const StateSet& s, Letter a);
/// delta^{-1}(S, w), applied right to left.
StateSet preimage(const Automaton& automaton, const StateSet& s, const Word& w);

/// True when every state of S has at least one a-preimage, i.e. the full
/// preimage of S under a maps back onto S.
inline bool has_letter_predecessor(const Automaton& automaton, const StateSet& s, Letter a) {
  return s.is_subset_of(automaton.letter_image(a));
}

/// The maximal w-predecessor of S, or nullopt when S has none.
std::optional<StateSet> w_predecessor(const Automaton& automaton, const StateSet& s, const Word& w);

/// True when delta^{-1}(S, w) is a w-predecessor of S strictly larger than S.
bool is_properly_extending(const Automaton& automaton, const StateSet& s, const Word& w);

}  // namespace crdfa
