#include "crdfa/automaton.hpp"

#include <algorithm>
#include <string>

#include "crdfa/error.hpp"

namespace crdfa {

Automaton::Automaton(std::size_t states, std::size_t letters, std::vector<State> table)
    : states_(states), letters_(letters), table_(std::move(table)) {
  if (states_ == 0) throw InvalidInput("automaton needs at least one state");
  if (letters_ == 0) throw InvalidInput("automaton needs at least one letter");
  if (table_.size() != states_ * letters_) {
    throw InvalidInput("transition table has " + std::to_string(table_.size()) + " entries, expected " +
                       std::to_string(states_ * letters_));
  }
  for (State target : table_) {
    if (target >= states_) {
      throw InvalidInput("transition target " + std::to_string(target) + " out of range");
    }
  }

  // Counting sort of (letter, target) pairs gives the inverse relation with
  // each preimage list in increasing state order.
  inverse_offsets_.assign(states_ * letters_ + 1, 0);
  for (std::size_t a = 0; a < letters_; ++a) {
    for (std::size_t q = 0; q < states_; ++q) ++inverse_offsets_[a * states_ + table_[a * states_ + q] + 1];
  }
  for (std::size_t i = 1; i < inverse_offsets_.size(); ++i) inverse_offsets_[i] += inverse_offsets_[i - 1];
  inverse_states_.resize(table_.size());
  std::vector<std::size_t> fill(inverse_offsets_.begin(), inverse_offsets_.end() - 1);
  for (std::size_t a = 0; a < letters_; ++a) {
    for (std::size_t q = 0; q < states_; ++q) {
      inverse_states_[fill[a * states_ + table_[a * states_ + q]]++] = static_cast<State>(q);
    }
  }

  letter_images_.reserve(letters_);
  for (std::size_t a = 0; a < letters_; ++a) {
    StateSet img(states_);
    for (std::size_t q = 0; q < states_; ++q) img.insert(table_[a * states_ + q]);
    letter_images_.push_back(std::move(img));
  }
}

Automaton Automaton::from_rows(const std::vector<std::vector<State>>& rows) {
  if (rows.empty()) throw InvalidInput("automaton needs at least one letter");
  const std::size_t n = rows.front().size();
  std::vector<State> table;
  table.reserve(n * rows.size());
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidInput("rows of unequal length");
    table.insert(table.end(), row.begin(), row.end());
  }
  return Automaton(n, rows.size(), std::move(table));
}

void check_set(const Automaton& automaton, const StateSet& s) {
  if (s.universe() != automaton.states()) {
    throw InvalidInput("set over " + std::to_string(s.universe()) + " states used with an automaton of " +
                       std::to_string(automaton.states()) + " states");
  }
}

void check_word(const Automaton& automaton, const Word& w) {
  w.for_each([&](Letter a) {
    if (a >= automaton.letters()) {
      throw InvalidInput("letter " + std::to_string(a) + " out of range for an alphabet of " +
                         std::to_string(automaton.letters()));
    }
  });
}

namespace {

StateSet image_unchecked(const Automaton& automaton, const StateSet& s, Letter a) {
  StateSet out(automaton.states());
  const auto row = automaton.row(a);
  s.for_each([&](State q) { out.insert(row[q]); });
  return out;
}

StateSet preimage_unchecked(const Automaton& automaton, const StateSet& s, Letter a) {
  StateSet out(automaton.states());
  const auto row = automaton.row(a);
  auto blocks = out.blocks();
  const std::size_t n = automaton.states();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    StateSet::Block bits = 0;
    const std::size_t base = b * StateSet::kBlockBits;
    const std::size_t end = std::min(n - base, StateSet::kBlockBits);
    for (std::size_t j = 0; j < end; ++j) {
      bits |= static_cast<StateSet::Block>(s.contains(row[base + j])) << j;
    }
    blocks[b] = bits;
  }
  return out;
}

void check_letter(const Automaton& automaton, Letter a) {
  if (a >= automaton.letters()) {
    throw InvalidInput("letter " + std::to_string(a) + " out of range for an alphabet of " +
                       std::to_string(automaton.letters()));
  }
}

}  // namespace

StateSet image(const Automaton& automaton, const StateSet& s, Letter a) {
  check_set(automaton, s);
  check_letter(automaton, a);
  return image_unchecked(automaton, s, a);
}

StateSet image(const Automaton& automaton, const StateSet& s, const Word& w) {
  check_set(automaton, s);
  check_word(automaton, w);
  StateSet current = s;
  w.for_each([&](Letter a) { current = image_unchecked(automaton, current, a); });
  return current;
}

StateSet preimage(const Automaton& automaton, const StateSet& s, Letter a) {
  check_set(automaton, s);
  check_letter(automaton, a);
  return preimage_unchecked(automaton, s, a);
}

StateSet preimage(const Automaton& automaton, const StateSet& s, const Word& w) {
  check_set(automaton, s);
  check_word(automaton, w);
  const auto letters = w.letters();
  StateSet current = s;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    current = preimage_unchecked(automaton, current, *it);
  }
  return current;
}

std::optional<StateSet> w_predecessor(const Automaton& automaton, const StateSet& s, const Word& w) {
  StateSet pre = preimage(automaton, s, w);
  if (image(automaton, pre, w) != s) return std::nullopt;
  return pre;
}

bool is_properly_extending(const Automaton& automaton, const StateSet& s, const Word& w) {
  const auto pre = w_predecessor(automaton, s, w);
  return pre && pre->size() > s.size();
}

}  // namespace crdfa
