#include "crdfa/witness.hpp"

#include <deque>
#include <limits>
#include <unordered_set>

#include "crdfa/error.hpp"

namespace crdfa {

namespace {

void check_proper_nonempty(const Automaton& automaton, const StateSet& s) {
  check_set(automaton, s);
  if (s.empty()) throw InvalidInput("set must be non-empty");
  if (s.is_full()) throw InvalidInput("set must be a proper subset of Q");
}

// For each state q, the processed predecessor whose complement contains q.
// Complements recorded here are pairwise disjoint.
class AbsentIndex {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  explicit AbsentIndex(std::size_t n) : owner_(n, kNone), marked_(n) {}

  // Owner of the smallest marked state in `complement`.
  std::size_t collision(const StateSet& complement) const {
    const auto q = complement.first_common(marked_);
    return q ? owner_[*q] : kNone;
  }

  void record(const StateSet& complement, std::size_t index) {
    complement.for_each([&](State q) { owner_[q] = index; });
    marked_ |= complement;
  }

 private:
  std::vector<std::size_t> owner_;
  StateSet marked_;
};

// Successors of every state of `from` under w, in member order.
std::vector<State> track(const Automaton& automaton, const StateSet& from, const Word& w) {
  std::vector<State> positions = from.members();
  w.for_each([&](Letter a) {
    const auto row = automaton.row(a);
    for (State& p : positions) p = row[p];
  });
  return positions;
}

// States hit at least twice when `from` is read along w.
StateSet merged_targets(const Automaton& automaton, const StateSet& from, const Word& w) {
  StateSet once(automaton.states());
  StateSet twice(automaton.states());
  for (State p : track(automaton, from, w)) {
    if (once.contains(p)) twice.insert(p);
    once.insert(p);
  }
  return twice;
}

StateSet tracked_image(const Automaton& automaton, const StateSet& from, const Word& w) {
  StateSet out(automaton.states());
  for (State p : track(automaton, from, w)) out.insert(p);
  return out;
}

}  // namespace

bool is_witness_candidate(const Automaton& automaton, const StateSet& s) {
  check_proper_nonempty(automaton, s);
  const std::size_t target = s.size();

  std::deque<StateSet> queue{s};
  std::unordered_set<StateSet, StateSetHash> seen{s};
  std::vector<StateSet> processed;
  AbsentIndex absent(automaton.states());

  while (!queue.empty()) {
    StateSet t = std::move(queue.front());
    queue.pop_front();
    if (t.size() > target) return false;

    const StateSet complement = t.complement();
    if (const auto idx = absent.collision(complement); idx != AbsentIndex::kNone) {
      if (processed[idx] == t) continue;
      return false;
    }
    absent.record(complement, processed.size());

    for (Letter a = 0; a < automaton.letters(); ++a) {
      if (!has_letter_predecessor(automaton, t, a)) continue;
      StateSet pre = preimage(automaton, t, a);
      if (seen.insert(pre).second) queue.push_back(std::move(pre));
    }
    processed.push_back(std::move(t));
  }
  return true;
}

ExtendingWordFinder::ExtendingWordFinder(const Automaton& automaton) : automaton_(automaton) {}

std::optional<ProperExtension> ExtendingWordFinder::find(const StateSet& s) {
  check_proper_nonempty(automaton_, s);
  return search(s, 0);
}

std::optional<ProperExtension> ExtendingWordFinder::search(const StateSet& s, std::size_t depth) {
  if (const auto it = cache_.find(s); it != cache_.end()) return it->second;
  // Every recursive call is on a strictly larger set.
  if (depth > automaton_.states()) throw InternalError("extending word recursion exceeded its depth budget");

  const std::size_t target = s.size();
  std::deque<PredecessorEntry> queue{{s, Word{}}};
  std::unordered_set<StateSet, StateSetHash> seen{s};
  std::vector<PredecessorEntry> processed;
  AbsentIndex absent(automaton_.states());

  auto remember = [&](ProperExtension found) {
    return cache_.emplace(s, std::move(found)).first->second;
  };

  while (!queue.empty()) {
    PredecessorEntry entry = std::move(queue.front());
    queue.pop_front();

    if (entry.set.size() > target) {
      StateSet merged = merged_targets(automaton_, entry.set, entry.word);
      return remember({std::move(entry.word), std::move(merged)});
    }

    const StateSet complement = entry.set.complement();
    if (const auto idx = absent.collision(complement); idx != AbsentIndex::kNone) {
      const PredecessorEntry& other = processed[idx];
      if (other.set == entry.set) continue;

      // The complements intersect, so the union is a proper superset of
      // both; its extending word extends one of the two.
      StateSet both = entry.set | other.set;
      auto inner = search(both, depth + 1);
      if (!inner) throw AssumptionViolated(std::move(both));

      const PredecessorEntry& chosen = inner->merged.intersects(entry.set) ? entry : other;
      StateSet merged = tracked_image(automaton_, inner->merged & chosen.set, chosen.word);
      return remember({inner->word + chosen.word, std::move(merged)});
    }
    absent.record(complement, processed.size());

    for (Letter a = 0; a < automaton_.letters(); ++a) {
      if (!has_letter_predecessor(automaton_, entry.set, a)) continue;
      StateSet pre = preimage(automaton_, entry.set, a);
      if (seen.insert(pre).second) queue.push_back({std::move(pre), Word::letter(a) + entry.word});
    }
    processed.push_back(std::move(entry));
  }
  return std::nullopt;
}

std::optional<Word> find_properly_extending_word(const Automaton& automaton, const StateSet& s) {
  ExtendingWordFinder finder(automaton);
  auto found = finder.find(s);
  if (!found) return std::nullopt;
  return std::move(found->word);
}

StateSet reduce(const Automaton& automaton, const StateSet& s, const Word& w) {
  check_set(automaton, s);
  check_word(automaton, w);
  const StateSet pre = preimage(automaton, s, w);
  if (pre.size() <= s.size() || image(automaton, pre, w) != s) {
    throw InvalidInput("word does not properly extend " + to_string(s));
  }
  return s - merged_targets(automaton, pre, w);
}

namespace {

// Sets bucketed by size and popped largest first, in insertion order
// within a size. `seen` remembers every set ever pushed.
class DescentQueue {
 public:
  explicit DescentQueue(std::size_t n) : buckets_(n + 1) {}

  void push(StateSet s) {
    if (s.empty() || !seen_.insert(s).second) return;
    buckets_[s.size()].push_back(std::move(s));
  }

  std::deque<StateSet>& bucket(std::size_t size) { return buckets_[size]; }

 private:
  std::vector<std::deque<StateSet>> buckets_;
  std::unordered_set<StateSet, StateSetHash> seen_;
};

std::vector<StateSet> descend(const Automaton& automaton, bool all) {
  const std::size_t n = automaton.states();
  DescentQueue queue(n);
  for (State q = 0; q < n; ++q) {
    StateSet s = automaton.all_states();
    s.erase(q);
    queue.push(std::move(s));
  }

  ExtendingWordFinder finder(automaton);
  std::vector<StateSet> witnesses;
  for (std::size_t size = n; size-- > 1;) {
    auto& bucket = queue.bucket(size);
    while (!bucket.empty()) {
      StateSet s = std::move(bucket.front());
      bucket.pop_front();
      const auto found = finder.find(s);
      if (!found) {
        witnesses.push_back(std::move(s));
        if (!all) return witnesses;
        continue;
      }
      // Once a witness is known, smaller sets are never examined.
      if (witnesses.empty()) queue.push(s - found->merged);
    }
    if (!witnesses.empty()) break;
  }
  return witnesses;
}

}  // namespace

std::optional<StateSet> find_witness(const Automaton& automaton) {
  auto found = descend(automaton, false);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<StateSet> find_all_witnesses(const Automaton& automaton) { return descend(automaton, true); }

WitnessReport analyze(const Automaton& automaton, bool all_witnesses) {
  WitnessReport report;
  if (all_witnesses) {
    report.all_witnesses = find_all_witnesses(automaton);
    if (!report.all_witnesses.empty()) report.witness = report.all_witnesses.front();
  } else {
    report.witness = find_witness(automaton);
  }
  report.completely_reachable = !report.witness.has_value();
  return report;
}

}  // namespace crdfa
