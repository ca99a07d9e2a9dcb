#include <doctest.h>

#include <algorithm>

#include "cantorprod/interval_set.hpp"
#include "oracles.hpp"

using namespace cantorprod;

namespace {

Interval iv(long a, long b, long d) { return Interval(Rational(a, d), Rational(b, d)); }

std::vector<Interval> random_intervals(oracle::Gen& gen, int count, long den) {
  std::vector<Interval> v;
  for (int i = 0; i < count; ++i) {
    long a = gen.uniform(0, den), b = gen.uniform(0, den);
    if (a > b) std::swap(a, b);
    v.push_back(iv(a, b, den));
  }
  return v;
}

bool sample_in(const std::vector<Interval>& v, const Rational& x) {
  return std::any_of(v.begin(), v.end(), [&](const Interval& i) { return i.contains(x); });
}

}  // namespace

TEST_SUITE("interval_set") {
  TEST_CASE("normalize examples") {
    CHECK(normalize({iv(0, 1, 1), iv(1, 2, 1)}).intervals() == std::vector{iv(0, 2, 1)});
    CHECK(normalize({}).empty());
    CHECK(normalize({iv(4, 8, 12), iv(0, 3, 12), iv(6, 9, 12)}).intervals() ==
          std::vector{iv(0, 3, 12), iv(4, 9, 12)});
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(IntervalSet::from_sorted({iv(0, 2, 3), iv(1, 3, 3)}), Error);
    CHECK_THROWS_AS(IntervalSet::from_sorted({iv(0, 1, 3), iv(1, 3, 3)}), Error);
  }

  TEST_CASE("measure examples") {
    CHECK(measure(normalize({iv(2, 3, 3)})) == Rational(1, 3));
    CHECK(measure(normalize({iv(6, 7, 9), iv(8, 9, 9)})) == Rational(2, 9));
    CHECK(measure(normalize({iv(4, 9, 9)})) == Rational(5, 9));
  }

  TEST_CASE("set difference examples") {
    const IntervalSet unit = normalize({iv(0, 1, 1)});
    CHECK(set_difference(unit, normalize({iv(1, 2, 3)})).intervals() == std::vector{iv(0, 1, 3), iv(2, 3, 3)});
    CHECK(set_difference(unit, {}) == unit);
    CHECK(set_difference(unit, unit).empty());
    // Removing a single point leaves the closure unchanged.
    CHECK(set_difference(unit, normalize({iv(1, 1, 2)})) == unit);
    // An isolated point left behind is dropped.
    CHECK(set_difference(normalize({iv(0, 2, 1)}), normalize({iv(0, 1, 2), iv(1, 4, 2)})).empty());
  }

  TEST_CASE("middle third and affine image") {
    CHECK(remove_middle_third(iv(2, 3, 3)).intervals() == std::vector{iv(6, 7, 9), iv(8, 9, 9)});
    const IntervalSet gaps = normalize({iv(1, 2, 9), iv(3, 6, 9), iv(7, 8, 9)});
    CHECK(affine_image(gaps, iv(2, 3, 3)).intervals() ==
          std::vector{iv(19, 20, 27), iv(21, 24, 27), iv(25, 26, 27)});
    CHECK(affine_image(Rational(1, 2), iv(2, 3, 3)) == Rational(5, 6));
  }

  TEST_CASE("normalize agrees with merge oracle and is idempotent") {
    oracle::Gen gen(202);
    for (int trial = 0; trial < 200; ++trial) {
      auto raw = random_intervals(gen, 1 + trial % 12, 60);
      const IntervalSet s = normalize(raw);
      CHECK(s.intervals() == oracle::merge(raw));
      CHECK(normalize(s.intervals()) == s);
      std::shuffle(raw.begin(), raw.end(), gen.engine());
      CHECK(measure(normalize(raw)) == measure(s));
      for (int i = 0; i < 10; ++i) {
        const Rational x(gen.uniform(-2, 122), 120);
        CHECK(s.contains(x) == sample_in(raw, x));
      }
    }
  }

  TEST_CASE("union and difference against point sampling") {
    oracle::Gen gen(203);
    for (int trial = 0; trial < 200; ++trial) {
      const IntervalSet s = normalize(random_intervals(gen, 5, 40));
      const IntervalSet t = normalize(random_intervals(gen, 5, 40));
      const IntervalSet u = set_union(s, t), d = set_difference(s, t);
      CHECK(measure(u) + measure(set_difference(s, set_difference(s, t))) == measure(s) + measure(t));
      CHECK(measure(d) <= measure(s));
      CHECK(u.contains(s));
      CHECK(u.contains(t));
      CHECK(s.contains(d));
      for (int i = 0; i < 20; ++i) {
        // Odd numerators over 240 never hit an endpoint over 40.
        const Rational x(2 * gen.uniform(0, 119) + 1, 240);
        CHECK(u.contains(x) == (s.contains(x) || t.contains(x)));
        CHECK(d.contains(x) == (s.contains(x) && !t.contains(x)));
      }
    }
  }

  TEST_CASE("affine image scales measure") {
    oracle::Gen gen(204);
    for (int trial = 0; trial < 150; ++trial) {
      const IntervalSet s = normalize(random_intervals(gen, 6, 30));
      long a = gen.uniform(0, 50), b = gen.uniform(0, 50);
      if (a == b) ++b;
      if (a > b) std::swap(a, b);
      const Interval target = iv(a, b, 17);
      CHECK(measure(affine_image(s, target)) == target.length() * measure(s));
    }
  }
}
