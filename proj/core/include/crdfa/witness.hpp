#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "crdfa/automaton.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

namespace crdfa {

/// A predecessor of the current search root: image(set, word) == root.
struct PredecessorEntry {
  StateSet set;
  Word word;
};

/// Outcome of the complete-reachability decision.
struct WitnessReport {
  bool completely_reachable = true;
  std::optional<StateSet> witness;
  /// Filled only when every witness was requested.
  std::vector<StateSet> all_witnesses;
};

/// A properly extending word for some set S together with the states of S
/// that have two or more preimages under it. Removing `merged` from S is
/// exactly the reduction step.
struct ProperExtension {
  Word word;
  StateSet merged;
};

/// Decides whether S has no larger predecessor and all of its predecessors
/// have pairwise disjoint complements.
///
/// Breadth-first search over single-letter predecessors of S. For every
/// state, `absent[q]` remembers the processed predecessor whose complement
/// contains q; meeting q again in another complement means two
/// predecessors whose union is a proper superset, which rules S out.
/// Requires S non-empty and S != Q.
bool is_witness_candidate(const Automaton& automaton, const StateSet& s);

/// Searches for properly extending words, memoizing every successful
/// search. Results are a deterministic function of the input set, so a
/// finder may be reused for any number of queries on one automaton.
///
/// Correct whenever every set strictly between |S| and n has a larger
/// predecessor. When that fails, the recursion reaches a superset with no
/// extending word and AssumptionViolated is thrown carrying that superset.
class ExtendingWordFinder {
 public:
  explicit ExtendingWordFinder(const Automaton& automaton);

  /// nullopt iff S is a witness candidate.
  std::optional<ProperExtension> find(const StateSet& s);

  std::size_t cached() const noexcept { return cache_.size(); }

 private:
  std::optional<ProperExtension> search(const StateSet& s, std::size_t depth);

  const Automaton& automaton_;
  std::unordered_map<StateSet, ProperExtension, StateSetHash> cache_;
};

/// A properly extending word for S, or nullopt when S is a witness
/// candidate. See ExtendingWordFinder for the failure mode.
std::optional<Word> find_properly_extending_word(const Automaton& automaton, const StateSet& s);

/// The states of S with exactly one preimage under w. Throws InvalidInput
/// unless w is properly extending S.
StateSet reduce(const Automaton& automaton, const StateSet& s, const Word& w);

/// nullopt iff the automaton is completely reachable; otherwise an
/// unreachable set of the maximal unreachable size.
std::optional<StateSet> find_witness(const Automaton& automaton);

/// Every witness, in discovery order. Empty iff completely reachable.
std::vector<StateSet> find_all_witnesses(const Automaton& automaton);

WitnessReport analyze(const Automaton& automaton, bool all_witnesses = false);

}  // namespace crdfa
