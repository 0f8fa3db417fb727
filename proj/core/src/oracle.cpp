#include "crdfa/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <string>
#include <unordered_map>

#include "crdfa/error.hpp"

namespace crdfa {

namespace {

void check_capacity(const Automaton& automaton) {
  if (automaton.states() > kOracleMaxStates) {
    throw CapacityError("exhaustive search supports at most " + std::to_string(kOracleMaxStates) +
                        " states, got " + std::to_string(automaton.states()));
  }
}

// Image of a mask under one letter, by 8-bit table lookups.
class MaskImage {
 public:
  MaskImage(const Automaton& automaton, Letter a) {
    const auto row = automaton.row(a);
    const std::size_t n = automaton.states();
    for (std::size_t chunk = 0; chunk < kChunks; ++chunk) {
      for (std::uint32_t byte = 0; byte < 256; ++byte) {
        std::uint32_t out = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t q = chunk * 8 + bit;
          if (q < n && ((byte >> bit) & 1U)) out |= std::uint32_t{1} << row[q];
        }
        tables_[chunk][byte] = out;
      }
    }
  }

  std::uint32_t operator()(std::uint32_t mask) const noexcept {
    return tables_[0][mask & 0xFF] | tables_[1][(mask >> 8) & 0xFF] | tables_[2][(mask >> 16) & 0xFF];
  }

 private:
  static constexpr std::size_t kChunks = 3;
  std::array<std::array<std::uint32_t, 256>, kChunks> tables_{};
};

std::uint32_t preimage_mask(const Automaton& automaton, std::uint32_t mask, Letter a) {
  const auto row = automaton.row(a);
  std::uint32_t out = 0;
  for (std::size_t q = 0; q < automaton.states(); ++q) {
    if ((mask >> row[q]) & 1U) out |= std::uint32_t{1} << q;
  }
  return out;
}

}  // namespace

std::optional<std::size_t> OracleAtlas::distance(const StateSet& s) const {
  const auto d = distance_[static_cast<std::uint32_t>(s.to_mask())];
  if (d < 0) return std::nullopt;
  return static_cast<std::size_t>(d);
}

std::optional<Word> OracleAtlas::word_to(const StateSet& s) const {
  auto mask = static_cast<std::uint32_t>(s.to_mask());
  if (!reachable(mask)) return std::nullopt;
  std::vector<Letter> reversed;
  while (distance_[mask] > 0) {
    reversed.push_back(parent_letter_[mask]);
    mask = parent_[mask];
  }
  return Word(std::vector<Letter>(reversed.rbegin(), reversed.rend()));
}

OracleAtlas build_atlas(const Automaton& automaton) {
  check_capacity(automaton);
  const std::size_t n = automaton.states();
  OracleAtlas atlas;
  atlas.states_ = n;
  atlas.letters_ = automaton.letters();
  const std::size_t count = std::size_t{1} << n;
  atlas.distance_.assign(count, -1);
  atlas.parent_.assign(count, 0);
  atlas.parent_letter_.assign(count, 0);

  std::vector<MaskImage> images;
  images.reserve(automaton.letters());
  for (Letter a = 0; a < automaton.letters(); ++a) images.emplace_back(automaton, a);

  const auto full = static_cast<std::uint32_t>(count - 1);
  std::vector<std::uint32_t> frontier{full};
  atlas.distance_[full] = 0;
  // The frontier vector doubles as the FIFO queue.
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const std::uint32_t mask = frontier[head];
    for (Letter a = 0; a < automaton.letters(); ++a) {
      const std::uint32_t next = images[a](mask);
      if (atlas.distance_[next] >= 0) continue;
      atlas.distance_[next] = atlas.distance_[mask] + 1;
      atlas.parent_[next] = mask;
      atlas.parent_letter_[next] = a;
      frontier.push_back(next);
    }
  }
  atlas.reachable_count_ = frontier.size();
  return atlas;
}

bool oracle_is_completely_reachable(const OracleAtlas& atlas) {
  return atlas.reachable_count() == (std::size_t{1} << atlas.states()) - 1;
}

std::vector<StateSet> oracle_witnesses(const OracleAtlas& atlas) {
  const std::size_t count = std::size_t{1} << atlas.states();
  int best = 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (!atlas.reachable(mask)) best = std::max(best, std::popcount(mask));
  }
  std::vector<StateSet> out;
  if (best == 0) return out;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (!atlas.reachable(mask) && std::popcount(mask) == best) {
      out.push_back(StateSet::from_mask(atlas.states(), mask));
    }
  }
  return out;
}

std::optional<Word> oracle_shortest_extending(const Automaton& automaton, const StateSet& s) {
  check_capacity(automaton);
  check_set(automaton, s);
  if (s.empty() || s.is_full()) throw InvalidInput("set must be a non-empty proper subset");

  const auto start = static_cast<std::uint32_t>(s.to_mask());
  const int size = std::popcount(start);
  std::vector<std::uint32_t> images;
  for (Letter a = 0; a < automaton.letters(); ++a) {
    images.push_back(static_cast<std::uint32_t>(automaton.letter_image(a).to_mask()));
  }

  // parent[x] = (y, a) with x = preimage(y, a).
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, Letter>> parent;
  parent.emplace(start, std::pair{start, Letter{0}});
  auto word_from = [&](std::uint32_t mask) {
    std::vector<Letter> letters;
    while (mask != start) {
      const auto [up, a] = parent.at(mask);
      letters.push_back(a);
      mask = up;
    }
    return letters;
  };

  std::deque<std::uint32_t> queue{start};
  while (!queue.empty()) {
    const std::uint32_t mask = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < automaton.letters(); ++a) {
      if ((mask & ~images[a]) != 0) continue;
      const std::uint32_t pre = preimage_mask(automaton, mask, a);
      if (std::popcount(pre) > size) {
        std::vector<Letter> letters{a};
        const auto rest = word_from(mask);
        letters.insert(letters.end(), rest.begin(), rest.end());
        return Word(std::move(letters));
      }
      if (parent.emplace(pre, std::pair{mask, a}).second) queue.push_back(pre);
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> oracle_reset_threshold(const OracleAtlas& atlas) {
  std::optional<std::size_t> best;
  for (std::size_t q = 0; q < atlas.states(); ++q) {
    const auto d = atlas.distance(StateSet::singleton(atlas.states(), static_cast<State>(q)));
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

long oracle_max_laminar(long n, long cap) {
  if (n < 1 || cap < 1) throw InvalidInput("oracle_max_laminar needs n >= 1 and cap >= 1");
  // best[m]: optimum over partitions of m; a block of size p holds at most
  // 2p - 1 nested boxes.
  std::vector<long> best(static_cast<std::size_t>(n) + 1, 0);
  for (long m = 1; m <= n; ++m) {
    long value = 0;
    for (long p = 1; p <= std::min(cap, m); ++p) {
      value = std::max(value, best[static_cast<std::size_t>(m - p)] + 2 * p - 1);
    }
    best[static_cast<std::size_t>(m)] = value;
  }
  return best[static_cast<std::size_t>(n)];
}

}  // namespace crdfa
