#include <doctest.h>

#include "kucheck/event.hpp"
#include "oracle.hpp"

using kuc::Event;

TEST_CASE("basic algebra") {
  Event omega = Event::full_set(2);
  Event empty = Event::empty_set(2);
  Event a = Event::singleton(0, 2);
  Event ab = Event::full_set(2);

  CHECK(omega.complement() == empty);
  CHECK((a & ab) == a);
  CHECK((ab - a) == Event::singleton(1, 2));
  CHECK(a.subset_of(ab));
  CHECK(!ab.subset_of(a));
  CHECK(a.proper_subset_of(ab));
  CHECK(!a.proper_subset_of(a));
  CHECK(a.equals(a));
  CHECK(omega.full());
  CHECK(empty.empty());
  CHECK(omega.count() == 2);
}

TEST_CASE("universe mismatch is a usage error") {
  Event a2 = Event::singleton(0, 2);
  Event a3 = Event::singleton(0, 3);
  CHECK_THROWS_AS((void)a2.intersect(a3), kuc::UsageError);
  CHECK_THROWS_AS((void)a2.equals(a3), kuc::UsageError);
  CHECK_THROWS_AS((void)a2.subset_of(a3), kuc::UsageError);
  CHECK(a2 != a3);  // structural comparison stays usable
}

TEST_CASE("out-of-range construction") {
  CHECK_THROWS_AS(Event::from_bits(0b100, 2), kuc::UsageError);
  CHECK_THROWS_AS(Event::singleton(2, 2), kuc::UsageError);
  CHECK_THROWS_AS(Event::full_set(65), kuc::UsageError);
}

// Bit operations agree with the per-element reference on every subset pair.
TEST_CASE("algebra matches the naive reference for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto events = oracle::all_events(n);
    for (const auto& sa : events) {
      Event a = oracle::to_event(sa, n);
      CHECK(oracle::from_event(a.complement()) ==
            oracle::set_minus(oracle::omega(n), sa));
      for (const auto& sb : events) {
        Event b = oracle::to_event(sb, n);
        CHECK(oracle::from_event(a & b) == oracle::set_and(sa, sb));
        CHECK(oracle::from_event(a | b) == oracle::set_or(sa, sb));
        CHECK(oracle::from_event(a - b) == oracle::set_minus(sa, sb));
        CHECK(a.subset_of(b) == oracle::subset(sa, sb));
        CHECK(a.equals(b) == (sa == sb));
      }
    }
  }
}
