#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crdfa {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A subset of the states {0, ..., n-1}, packed into 64-bit blocks.
///
/// Every set carries its universe size n. Binary operations require both
/// operands to share the same universe; bits past n are always zero.
class StateSet {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  StateSet() = default;
  explicit StateSet(std::size_t universe);

  static StateSet full(std::size_t universe);
  static StateSet singleton(std::size_t universe, State q);
  static StateSet of(std::size_t universe, std::initializer_list<State> states);
  static StateSet of(std::size_t universe, std::span<const State> states);
  /// Bit i of `mask` is state i. Requires universe <= 64.
  static StateSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(State q) const noexcept {
    return (blocks_[q / kBlockBits] >> (q % kBlockBits)) & 1U;
  }
  void insert(State q) noexcept { blocks_[q / kBlockBits] |= Block{1} << (q % kBlockBits); }
  void erase(State q) noexcept { blocks_[q / kBlockBits] &= ~(Block{1} << (q % kBlockBits)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == universe_; }

  StateSet complement() const;
  bool is_subset_of(const StateSet& other) const noexcept;
  bool intersects(const StateSet& other) const noexcept;

  /// Smallest member, if any.
  std::optional<State> first() const noexcept;
  /// Smallest state in both sets, if any.
  std::optional<State> first_common(const StateSet& other) const noexcept;

  StateSet& operator|=(const StateSet& other) noexcept;
  StateSet& operator&=(const StateSet& other) noexcept;
  StateSet& operator-=(const StateSet& other) noexcept;

  friend StateSet operator|(StateSet lhs, const StateSet& rhs) noexcept { return lhs |= rhs; }
  friend StateSet operator&(StateSet lhs, const StateSet& rhs) noexcept { return lhs &= rhs; }
  friend StateSet operator-(StateSet lhs, const StateSet& rhs) noexcept { return lhs -= rhs; }

  bool operator==(const StateSet& other) const noexcept = default;
  /// Orders first by universe, then colexicographically by membership.
  std::strong_ordering operator<=>(const StateSet& other) const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      Block bits = blocks_[b];
      while (bits != 0) {
        const auto offset = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<State>(b * kBlockBits + offset));
        bits &= bits - 1;
      }
    }
  }

  std::vector<State> members() const;
  std::span<const Block> blocks() const noexcept { return blocks_; }
  std::span<Block> blocks() noexcept { return blocks_; }
  /// Requires universe <= 64.
  std::uint64_t to_mask() const noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<Block> blocks_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

/// "{0,3,5}"
std::string to_string(const StateSet& s);

}  // namespace crdfa
