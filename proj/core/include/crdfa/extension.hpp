#pragma once

#include <cstddef>
#include <vector>

#include "crdfa/automaton.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

namespace crdfa {

/// Maximum size of a non-colliding (laminar) family of non-empty subsets
/// of an n-element universe: 2n - 1.
long max_nested_boxes(long n);

/// Same, restricted to subsets of size at most `cap`: 2n - ceil(n / cap).
long max_nested_boxes_capped(long n, long cap);

/// Upper bound on the total length of the extension chain from a set of
/// size m up to Q: (n - m) 2n - n ln(n - m) - n / (n - m). Requires
/// 1 <= m <= n - 1.
double extension_length_budget(long n, long m);

struct BoundBudget {
  long n = 0;
  long m = 0;
  /// Longest properly extending word for one set of size m.
  long per_step = 0;
  /// Longest reaching word for a set of size m.
  double total = 0.0;
};

BoundBudget bound_budget(long n, long m);

/// Observation hook for find_short_properly_extending_word.
struct ShortExtensionTrace {
  /// The last set traced in each main-loop iteration, in order. Their
  /// complements form a non-colliding family.
  std::vector<StateSet> iteration_keys;
  /// The search roots: S followed by every promoted union.
  std::vector<StateSet> roots;
};

/// A properly extending word for S of length at most
/// 2n - ceil(n / (n - |S|)), found by a single breadth-first trace that
/// restarts from the union of two traced sets whenever their complements
/// intersect. Throws NotCompletelyReachable when S is blocked by a
/// witness candidate.
Word find_short_properly_extending_word(const Automaton& automaton, const StateSet& s,
                                        ShortExtensionTrace* trace = nullptr);

/// A word w with delta(Q, w) = S, built by chaining short properly
/// extending words from S up to Q. `chain`, when given, receives
/// S = S_0 < S_1 < ... < S_m = Q.
Word reach_word(const Automaton& automaton, const StateSet& s,
                std::vector<StateSet>* chain = nullptr);

/// A word collapsing Q to a single state. Throws NotSynchronizing if every
/// letter is a permutation.
Word reset_word(const Automaton& automaton);

}  // namespace crdfa
