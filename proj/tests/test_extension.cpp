#include <doctest.h>

#include <cmath>

#include "crdfa/error.hpp"
#include "crdfa/extension.hpp"
#include "crdfa/generators.hpp"
#include "crdfa/oracle.hpp"
#include "crdfa/witness.hpp"
#include "support.hpp"

using namespace crdfa;

namespace {

StateSet all_but(std::size_t n, std::initializer_list<State> removed) {
  StateSet s = StateSet::full(n);
  for (State q : removed) s.erase(q);
  return s;
}

std::size_t ceil_budget(std::size_t n, std::size_t m) {
  return static_cast<std::size_t>(std::ceil(extension_length_budget(static_cast<long>(n), static_cast<long>(m))));
}

bool colliding(const StateSet& x, const StateSet& y) {
  const StateSet both = x & y;
  return !both.empty() && both != x && both != y;
}

/// Every proper subset of a completely reachable automaton: short
/// extending words and reaching words stay within their budgets.
void check_bounds_everywhere(const Automaton& a) {
  const std::size_t n = a.states();
  const OracleAtlas atlas = build_atlas(a);
  for (const StateSet& s : test::all_proper_subsets(n)) {
    ShortExtensionTrace trace;
    const Word w = find_short_properly_extending_word(a, s, &trace);
    CHECK(test::brute_properly_extending(a, s, w));
    CHECK(static_cast<long>(w.size()) <= max_nested_boxes_capped(static_cast<long>(n), static_cast<long>(n - s.size())));

    // Complements of the per-iteration keys form a non-colliding family
    // of blocks no larger than n - |S|.
    CHECK(trace.iteration_keys.size() <= static_cast<std::size_t>(max_nested_boxes_capped(
                                             static_cast<long>(n), static_cast<long>(n - s.size()))));
    for (std::size_t x = 0; x < trace.iteration_keys.size(); ++x) {
      const StateSet cx = trace.iteration_keys[x].complement();
      CHECK(cx.size() <= n - s.size());
      for (std::size_t y = x + 1; y < trace.iteration_keys.size(); ++y) {
        CHECK_FALSE(colliding(cx, trace.iteration_keys[y].complement()));
      }
    }
    for (std::size_t r = 1; r < trace.roots.size(); ++r) CHECK(trace.roots[r].size() > trace.roots[r - 1].size());

    std::vector<StateSet> chain;
    const Word reach = reach_word(a, s, &chain);
    CHECK(image(a, a.all_states(), reach) == s);
    CHECK(reach.size() <= ceil_budget(n, s.size()));
    CHECK(reach.size() >= *atlas.distance(s));
    CHECK(chain.front() == s);
    CHECK(chain.back().is_full());
    CHECK(chain.size() - 1 <= n - s.size());
    for (std::size_t c = 1; c < chain.size(); ++c) CHECK(chain[c].size() > chain[c - 1].size());
  }

  if (n >= 2) {
    const Word r = reset_word(a);
    CHECK(image(a, a.all_states(), r).size() == 1);
    CHECK(r.size() >= *oracle_reset_threshold(atlas));
    if (n >= 3) CHECK(r.size() <= ceil_budget(n, 2) + 1);
  }
}

/// One random cyclic permutation plus letters of rank n - 1, a shape that
/// is frequently completely reachable (uniform random maps almost never are
/// beyond five states).
Automaton cycle_and_merges(std::size_t n, std::size_t merges, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<State> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<State>(i);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next() % (i + 1)]);
  std::vector<std::vector<State>> rows(1 + merges, std::vector<State>(n));
  for (std::size_t i = 0; i < n; ++i) rows[0][order[i]] = order[(i + 1) % n];
  for (std::size_t m = 1; m <= merges; ++m) {
    for (std::size_t q = 0; q < n; ++q) rows[m][q] = static_cast<State>(q);
    const auto from = static_cast<State>(rng.next() % n);
    auto to = static_cast<State>(rng.next() % (n - 1));
    if (to >= from) ++to;
    rows[m][from] = to;
  }
  return Automaton::from_rows(rows);
}

}  // namespace

TEST_CASE("nested boxes closed forms") {
  CHECK(max_nested_boxes(1) == 1);
  CHECK(max_nested_boxes(5) == 9);
  CHECK(max_nested_boxes_capped(12, 10) == 22);
  CHECK(max_nested_boxes_capped(6, 3) == 10);
  CHECK(max_nested_boxes_capped(6, 3) == oracle_max_laminar(6, 3));
  for (long n = 1; n <= 40; ++n) {
    CHECK(max_nested_boxes_capped(n, n) == max_nested_boxes(n));
    CHECK(max_nested_boxes_capped(n, 1) == n);
    CHECK(max_nested_boxes_capped(n, n + 7) == 2 * n - 1);
  }
  CHECK_THROWS_AS(max_nested_boxes(0), InvalidInput);
  CHECK_THROWS_AS(max_nested_boxes_capped(3, 0), InvalidInput);
  CHECK_THROWS_AS(max_nested_boxes_capped(0, 3), InvalidInput);
}

TEST_CASE("capped nested boxes match the partition DP") {
  for (long n = 1; n <= 30; ++n) {
    for (long k = 1; k <= n; ++k) CHECK(max_nested_boxes_capped(n, k) == oracle_max_laminar(n, k));
  }
}

TEST_CASE("extension length budget") {
  CHECK(extension_length_budget(12, 2) == doctest::Approx(240.0 - 12.0 * std::log(10.0) - 1.2));
  CHECK(extension_length_budget(12, 2) == doctest::Approx(211.17).epsilon(1e-4));
  CHECK(extension_length_budget(4, 2) == doctest::Approx(11.23).epsilon(1e-3));
  for (long n = 2; n <= 30; ++n) CHECK(extension_length_budget(n, n - 1) == doctest::Approx(static_cast<double>(n)));
  CHECK_THROWS_AS(extension_length_budget(5, 0), InvalidInput);
  CHECK_THROWS_AS(extension_length_budget(5, 5), InvalidInput);
}

TEST_CASE("bound budget invariants") {
  for (long n = 2; n <= 60; ++n) {
    for (long m = 1; m <= n - 1; ++m) {
      const BoundBudget b = bound_budget(n, m);
      CHECK(b.per_step == 2 * n - (n + (n - m) - 1) / (n - m));
      CHECK(b.per_step <= 2 * n - 1);
      CHECK(b.total < 2.0 * n * (n - m));
      // The closed form dominates the exact sum of per-step bounds.
      long exact = 0;
      for (long k = m; k <= n - 1; ++k) exact += max_nested_boxes_capped(n, n - k);
      CHECK(static_cast<double>(exact) <= b.total + 1e-9);
    }
  }
}

TEST_CASE("short extending words on the twelve-state example") {
  const Automaton fig2 = figure2();
  const auto s = StateSet::of(12, {0, 10});
  const Word w = find_short_properly_extending_word(fig2, s);
  CHECK(test::brute_properly_extending(fig2, s, w));
  CHECK(w.size() <= 22);

  const Word big = find_short_properly_extending_word(fig2, all_but(12, {1}));
  CHECK(test::brute_properly_extending(fig2, all_but(12, {1}), big));
  CHECK(big.size() <= 12);
  CHECK(is_properly_extending(fig2, all_but(12, {1}), Word{0, 1}));
}

TEST_CASE("short extending word search stops at a witness") {
  CHECK_THROWS_AS(find_short_properly_extending_word(figure1(), all_but(6, {0, 3})), NotCompletelyReachable);
  CHECK_THROWS_AS(find_short_properly_extending_word(figure1(), StateSet(6)), InvalidInput);
  CHECK_THROWS_AS(find_short_properly_extending_word(figure1(), StateSet::full(6)), InvalidInput);
}

TEST_CASE("reaching words") {
  const Automaton fig2 = figure2();
  CHECK(reach_word(fig2, fig2.all_states()).empty());

  const Word to_zero = reach_word(fig2, StateSet::of(12, {0}));
  CHECK(image(fig2, fig2.all_states(), to_zero) == StateSet::of(12, {0}));
  CHECK(to_zero.size() <= 234);
  CHECK(ceil_budget(12, 1) == 235);
  CHECK(to_zero.size() >= *build_atlas(fig2).distance(StateSet::of(12, {0})));

  const Automaton c4 = cerny(4);
  const Word c = reach_word(c4, StateSet::of(4, {0}));
  CHECK(image(c4, c4.all_states(), c) == StateSet::of(4, {0}));
  CHECK(c.size() <= 18);
  CHECK(ceil_budget(4, 1) == 19);
  CHECK_THROWS_AS(reach_word(figure1(), StateSet::of(6, {0})), NotCompletelyReachable);
}

TEST_CASE("reset words") {
  const Automaton fig2 = figure2();
  const Word w = reset_word(fig2);
  CHECK(image(fig2, fig2.all_states(), w).size() == 1);
  CHECK(w.size() <= 212);

  const Automaton c4 = cerny(4);
  const Word r = reset_word(c4);
  CHECK(image(c4, c4.all_states(), r).size() == 1);
  CHECK(r.size() >= 9);
  CHECK(r.size() <= 12);

  CHECK(reset_word(Automaton(1, 1, {0})).empty());
  CHECK_THROWS_AS(reset_word(Automaton(2, 1, {1, 0})), NotSynchronizing);
}

TEST_CASE("short extension and reaching bounds over random completely reachable automata") {
  std::size_t instances = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const Automaton a = test::sweep_automaton(i);
    if (find_witness(a)) continue;
    ++instances;
    check_bounds_everywhere(a);
  }
  CHECK(instances > 20);
}

TEST_CASE("short extension and reaching bounds over cycle-and-merge automata") {
  std::size_t instances = 0;
  std::size_t large = 0;
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    const std::size_t n = 4 + seed % 7;
    const Automaton a = cycle_and_merges(n, 1 + (seed / 7) % 2, seed);
    if (find_witness(a)) continue;
    ++instances;
    large += n >= 8 ? 1 : 0;
    check_bounds_everywhere(a);
  }
  CHECK(instances >= 40);
  CHECK(large >= 10);
}
