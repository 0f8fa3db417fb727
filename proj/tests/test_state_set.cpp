#include <doctest.h>

#include "crdfa/generators.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/word.hpp"

using namespace crdfa;

TEST_CASE("state set basics across block boundaries") {
  StateSet s(130);
  CHECK(s.empty());
  CHECK(s.size() == 0);
  s.insert(0);
  s.insert(63);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK(s.first() == State{0});
  s.erase(0);
  CHECK(s.first() == State{63});
  CHECK(to_string(s) == "{63,64,129}");
  CHECK(s.members() == std::vector<State>{63, 64, 129});

  const StateSet c = s.complement();
  CHECK(c.size() == 127);
  CHECK_FALSE(c.contains(129));
  CHECK(StateSet::full(130).size() == 130);
  CHECK(StateSet::full(130).is_full());
}

TEST_CASE("complement laws hold for random sets") {
  SplitMix64 rng(7);
  for (std::size_t n : {1U, 5U, 63U, 64U, 65U, 200U}) {
    for (int trial = 0; trial < 50; ++trial) {
      StateSet s(n);
      for (State q = 0; q < n; ++q) {
        if (rng.next() & 1U) s.insert(q);
      }
      CHECK(s.complement().complement() == s);
      CHECK((s | s.complement()).is_full());
      CHECK((s & s.complement()).empty());
      CHECK(s.size() + s.complement().size() == n);
      CHECK(s.members().size() == s.size());
    }
  }
}

TEST_CASE("subset, intersection and first_common") {
  const auto a = StateSet::of(10, {1, 2, 3});
  const auto b = StateSet::of(10, {2, 3});
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK(a.first_common(b) == State{2});
  CHECK_FALSE(StateSet::of(10, {0}).first_common(b).has_value());
  CHECK((a - b) == StateSet::of(10, {1}));
  CHECK(StateSet::from_mask(10, 0b1010).to_mask() == 0b1010);
}

TEST_CASE("ordering and hashing are consistent with equality") {
  const auto a = StateSet::of(70, {1, 69});
  const auto b = StateSet::of(70, {1, 69});
  const auto c = StateSet::of(70, {2});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK((a <=> b) == 0);
  CHECK(c < a);  // membership of 69 dominates
}

TEST_CASE("word concatenation is associative with the empty word as identity") {
  const Word e;
  const Word u{0, 1};
  const Word v{1};
  const Word w{2, 2, 0};
  CHECK((e + u) == u);
  CHECK((u + e) == u);
  CHECK(((u + v) + w) == (u + (v + w)));
  CHECK((u + v + w).letters() == std::vector<Letter>{0, 1, 1, 2, 2, 0});
  CHECK(e.empty());
}

TEST_CASE("long words share structure and keep reading order") {
  Word w;
  std::vector<Letter> expected;
  for (Letter i = 0; i < 500; ++i) {
    w = Word::letter(i % 3) + w;
    expected.insert(expected.begin(), i % 3);
  }
  CHECK(w.size() == 500);
  CHECK(w.letters() == expected);
  CHECK((w + w).size() == 1000);
}
