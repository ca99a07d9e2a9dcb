#include <doctest.h>

#include "cantorprod/product_image.hpp"
#include "oracles.hpp"

using namespace cantorprod;

namespace {

IntervalSet random_set(oracle::Gen& gen, int count, long den, long lo_num) {
  std::vector<Interval> raw;
  for (int i = 0; i < count; ++i) {
    long a = gen.uniform(lo_num, den), b = gen.uniform(lo_num, den);
    if (a > b) std::swap(a, b);
    raw.emplace_back(Rational(a, den), Rational(b, den));
  }
  return normalize(raw);
}

}  // namespace

TEST_SUITE("product_image") {
  TEST_CASE("small examples") {
    const IntervalSet r0 = normalize({Interval(Rational(2, 3), Rational(1))});
    CHECK(product_image(r0, r0).intervals() == std::vector{Interval(Rational(4, 9), Rational(1))});
    const IntervalSet r1 = remove_middle_third(Interval(Rational(2, 3), Rational(1)));
    CHECK(product_image(r1, r1).intervals() ==
          std::vector{Interval(Rational(4, 9), Rational(7, 9)), Interval(Rational(64, 81), Rational(1))});
    CHECK(product_image(IntervalSet{}, r1).empty());
  }

  TEST_CASE("matches the pairwise oracle on random sets") {
    oracle::Gen gen(401);
    for (int trial = 0; trial < 200; ++trial) {
      // Mix small common denominators (integer sweep) and awkward ones.
      const long den = trial % 3 == 0 ? 997 : 81;
      const IntervalSet s = random_set(gen, 1 + trial % 9, den, 0);
      const IntervalSet t = random_set(gen, 1 + trial % 7, trial % 2 ? den : 64, 0);
      const IntervalSet p = product_image(s, t);
      CHECK(p.intervals() == oracle::pairwise_product(s.intervals(), t.intervals()));
      const auto summary = product_image_summary(s, t);
      CHECK(summary.measure == measure(p));
      CHECK(summary.component_count == p.size());
    }
  }

  TEST_CASE("commutative and distributive over union") {
    oracle::Gen gen(402);
    for (int trial = 0; trial < 150; ++trial) {
      const IntervalSet s = random_set(gen, 4, 243, 100);
      const IntervalSet s2 = random_set(gen, 4, 243, 100);
      const IntervalSet t = random_set(gen, 5, 243, 100);
      CHECK(product_image(s, t) == product_image(t, s));
      CHECK(product_image(set_union(s, s2), t) == set_union(product_image(s, t), product_image(s2, t)));
    }
  }

  TEST_CASE("off-diagonal pairs lose nothing to the middle thirds") {
    oracle::Gen gen(403);
    int checked = 0;
    while (checked < 200) {
      const unsigned k = 1 + static_cast<unsigned>(gen.uniform(1, 6));
      const Interval i = gen.triadic_in_right_half(k), j = gen.triadic_in_right_half(k);
      if (i.intersects(j)) continue;
      const IntervalSet whole = product_image(normalize({i}), normalize({j}));
      CHECK(product_image(remove_middle_third(i), remove_middle_third(j)) == whole);
      ++checked;
    }
  }

  TEST_CASE("diagonal gap of a self product") {
    oracle::Gen gen(404);
    for (int trial = 0; trial < 200; ++trial) {
      // I = [a, a + 3t] inside [2/3, 1].
      const Rational t = gen.rational(Rational(1, 1000), Rational(1, 9), 200);
      const Rational a = gen.rational(Rational(2, 3), Rational(1) - 3 * t, 300);
      if (a < Rational(2, 3) || Rational(1) < a + 3 * t) continue;
      const Interval i(a, a + 3 * t);
      const IntervalSet full = product_image(normalize({i}), normalize({i}));
      const IntervalSet split = product_image(remove_middle_third(i), remove_middle_third(i));
      const Rational m = a + 2 * t;
      CHECK(set_difference(full, split).intervals() == std::vector{Interval(m * m - t * t, m * m)});
    }
  }

  TEST_CASE("result does not depend on threads, block size or backend") {
    oracle::Gen gen(405);
    for (int trial = 0; trial < 100; ++trial) {
      const IntervalSet s = random_set(gen, 30, 729, 486);
      const IntervalSet ref = product_image(s, s, ProductOptions{1, kernels::Backend::scalar, std::size_t{1} << 20});
      for (unsigned threads : {1u, 2u, 3u})
        for (std::size_t block : {std::size_t{1}, std::size_t{7}, std::size_t{1} << 20}) {
          CHECK(product_image(s, s, ProductOptions{threads, kernels::default_backend(), block}) == ref);
        }
    }
  }
}
