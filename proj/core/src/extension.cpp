#include "crdfa/extension.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>

#include "crdfa/error.hpp"
#include "crdfa/witness.hpp"

namespace crdfa {

long max_nested_boxes(long n) {
  if (n < 1) throw InvalidInput("max_nested_boxes needs n >= 1");
  return 2 * n - 1;
}

long max_nested_boxes_capped(long n, long cap) {
  if (n < 1 || cap < 1) throw InvalidInput("max_nested_boxes_capped needs n >= 1 and cap >= 1");
  const long c = std::min(cap, n);
  return 2 * n - (n + c - 1) / c;
}

double extension_length_budget(long n, long m) {
  if (m < 1 || m > n - 1) {
    throw InvalidInput("extension_length_budget needs 1 <= m <= n - 1 (n = " + std::to_string(n) +
                       ", m = " + std::to_string(m) + ")");
  }
  const auto nd = static_cast<double>(n);
  const auto gap = static_cast<double>(n - m);
  return gap * 2.0 * nd - nd * std::log(gap) - nd / gap;
}

BoundBudget bound_budget(long n, long m) {
  return {n, m, max_nested_boxes_capped(n, n - m), extension_length_budget(n, m)};
}

namespace {

// A traced set either reached the root of its time with a word, or is the
// union of two earlier traced sets.
using TraceValue = std::variant<Word, std::pair<StateSet, StateSet>>;

}  // namespace

Word find_short_properly_extending_word(const Automaton& automaton, const StateSet& s,
                                        ShortExtensionTrace* trace) {
  check_set(automaton, s);
  if (s.empty()) throw InvalidInput("set must be non-empty");
  if (s.is_full()) throw InvalidInput("set must be a proper subset of Q");

  std::unordered_map<StateSet, TraceValue, StateSetHash> traced;
  std::vector<const StateSet*> order;
  auto define = [&](const StateSet& key, TraceValue value) {
    const auto [it, inserted] = traced.try_emplace(key, std::move(value));
    if (inserted) order.push_back(&it->first);
  };

  StateSet root = s;
  if (trace) trace->roots.push_back(root);
  std::deque<PredecessorEntry> queue{{s, Word{}}};
  std::optional<StateSet> larger;

  while (!queue.empty()) {
    auto [t, w] = std::move(queue.front());
    queue.pop_front();
    if (traced.contains(t)) continue;
    define(t, w);
    if (t.size() > root.size()) {
      larger = std::move(t);
      break;
    }

    // Merge with the first traced set in trace order whose complement
    // collides with ours, then continue only from the union.
    for (;;) {
      const StateSet* partner = nullptr;
      for (const StateSet* other : order) {
        if (!other->is_subset_of(t) && !(t | *other).is_full()) {
          partner = other;
          break;
        }
      }
      if (!partner) break;
      StateSet both = t | *partner;
      define(both, std::pair{t, *partner});
      t = std::move(both);
      root = t;
      w = Word{};
      queue.clear();
      if (trace) trace->roots.push_back(root);
    }
    if (trace) trace->iteration_keys.push_back(t);

    for (Letter a = 0; a < automaton.letters(); ++a) {
      if (has_letter_predecessor(automaton, t, a)) {
        queue.push_back({preimage(automaton, t, a), Word::letter(a) + w});
      }
    }
  }
  if (!larger) throw NotCompletelyReachable(root);

  // Walk back from the larger predecessor to S. Each step keeps u properly
  // extending the current set.
  Word u;
  StateSet current = std::move(*larger);
  for (std::size_t steps = 0; current != s; ++steps) {
    if (steps > traced.size()) throw InternalError("short extension reconstruction did not terminate");
    const TraceValue& value = traced.at(current);
    if (const Word* piece = std::get_if<Word>(&value)) {
      current = image(automaton, current, *piece);
      u = u + *piece;
    } else {
      const auto& [first, second] = std::get<std::pair<StateSet, StateSet>>(value);
      if (is_properly_extending(automaton, first, u)) {
        current = first;
      } else if (is_properly_extending(automaton, second, u)) {
        current = second;
      } else {
        throw InternalError("union in trace is extended by neither of its parts");
      }
    }
  }
  return u;
}

Word reach_word(const Automaton& automaton, const StateSet& s, std::vector<StateSet>* chain) {
  check_set(automaton, s);
  if (s.empty()) throw InvalidInput("set must be non-empty");

  std::vector<Word> pieces;
  StateSet current = s;
  if (chain) chain->push_back(current);
  while (!current.is_full()) {
    Word w = find_short_properly_extending_word(automaton, current);
    current = preimage(automaton, current, w);
    pieces.push_back(std::move(w));
    if (chain) chain->push_back(current);
  }

  // delta(Q, w_{m-1}) = S_{m-1}, ..., delta(S_1, w_0) = S.
  Word result;
  for (const Word& piece : pieces) result = piece + result;
  if (image(automaton, automaton.all_states(), result) != s) {
    throw InternalError("reaching word does not reach " + to_string(s));
  }
  return result;
}

Word reset_word(const Automaton& automaton) {
  if (automaton.states() == 1) return Word{};
  for (Letter a = 0; a < automaton.letters(); ++a) {
    for (State q = 0; q < automaton.states(); ++q) {
      const auto sources = automaton.inverse(q, a);
      if (sources.size() >= 2) {
        return reach_word(automaton, StateSet::of(automaton.states(), sources)) + Word::letter(a);
      }
    }
  }
  throw NotSynchronizing("every letter permutes the states; no reset word exists");
}

}  // namespace crdfa
