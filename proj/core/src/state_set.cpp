#include "crdfa/state_set.hpp"

#include <algorithm>

namespace crdfa {

namespace {

std::size_t block_count(std::size_t universe) {
  return (universe + StateSet::kBlockBits - 1) / StateSet::kBlockBits;
}

}  // namespace

StateSet::StateSet(std::size_t universe) : universe_(universe), blocks_(block_count(universe), 0) {}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  std::fill(s.blocks_.begin(), s.blocks_.end(), ~Block{0});
  if (const std::size_t tail = universe % kBlockBits; tail != 0) {
    s.blocks_.back() = (Block{1} << tail) - 1;
  }
  return s;
}

StateSet StateSet::singleton(std::size_t universe, State q) {
  StateSet s(universe);
  s.insert(q);
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<State> states) {
  return of(universe, std::span<const State>(states.begin(), states.size()));
}

StateSet StateSet::of(std::size_t universe, std::span<const State> states) {
  StateSet s(universe);
  for (State q : states) s.insert(q);
  return s;
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
  StateSet s(universe);
  if (!s.blocks_.empty()) s.blocks_[0] = mask;
  return s;
}

std::size_t StateSet::size() const noexcept {
  std::size_t count = 0;
  for (Block b : blocks_) count += static_cast<std::size_t>(std::popcount(b));
  return count;
}

bool StateSet::empty() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](Block b) { return b == 0; });
}

StateSet StateSet::complement() const {
  StateSet result = full(universe_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) result.blocks_[i] &= ~blocks_[i];
  return result;
}

bool StateSet::is_subset_of(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i] & ~other.blocks_[i]) != 0) return false;
  }
  return true;
}

bool StateSet::intersects(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i] & other.blocks_[i]) != 0) return true;
  }
  return false;
}

std::optional<State> StateSet::first() const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] != 0) {
      return static_cast<State>(i * kBlockBits + static_cast<std::size_t>(std::countr_zero(blocks_[i])));
    }
  }
  return std::nullopt;
}

std::optional<State> StateSet::first_common(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (const Block both = blocks_[i] & other.blocks_[i]; both != 0) {
      return static_cast<State>(i * kBlockBits + static_cast<std::size_t>(std::countr_zero(both)));
    }
  }
  return std::nullopt;
}

StateSet& StateSet::operator|=(const StateSet& other) noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  return *this;
}

std::strong_ordering StateSet::operator<=>(const StateSet& other) const noexcept {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  for (std::size_t i = blocks_.size(); i-- > 0;) {
    if (auto c = blocks_[i] <=> other.blocks_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::uint64_t StateSet::to_mask() const noexcept { return blocks_.empty() ? 0 : blocks_[0]; }

std::size_t StateSet::hash() const noexcept {
  // FNV-style mix of the blocks, finished with a murmur avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (Block b : blocks_) {
    h ^= b;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

std::string to_string(const StateSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](State q) {
    if (!first) out += ',';
    out += std::to_string(q);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace crdfa
