#include <doctest.h>

#include "cantorprod/certificate.hpp"
#include "cantorprod/product_measure.hpp"
#include "oracles.hpp"

using namespace cantorprod;
using namespace cantorprod::product;

namespace {

Interval iv(long a, long b, long d) { return Interval(Rational(a, d), Rational(b, d)); }

}  // namespace

TEST_SUITE("product_measure") {
  TEST_CASE("self product measure examples") {
    CHECK(self_product_measure(normalize({iv(2, 3, 3)})) == Rational(5, 9));
    CHECK(self_product_measure(normalize({iv(1, 1, 1)})) == Rational(0));
    const auto r1 = oracle::cantor_level_right(2);
    CHECK(oracle::pairwise_product(r1, r1) == std::vector{iv(36, 63, 81), iv(64, 81, 81)});
    CHECK(self_product_measure(normalize(r1)) == Rational(44, 81));
  }

  TEST_CASE("standard estimate against the enumeration oracle") {
    CHECK(art_estimate(0).full_value == Rational(5, 6));
    CHECK(art_estimate(1).set_measure == Rational(44, 81));
    for (unsigned n = 0; n <= 7; ++n) {
      const auto rn = oracle::cantor_level_right(n + 1);
      const auto r = art_estimate(n);
      CHECK(r.set_measure == oracle::total_length(oracle::pairwise_product(rn, rn)));
      CHECK(r.full_value == Rational(3, 2) * r.set_measure);
      CHECK(r.tail_bound == Rational(1, 63) * Rational(2, 9).pow(n));
    }
    CHECK_THROWS_AS(art_estimate(17), Error);
  }

  TEST_CASE("standard estimates decrease and their enclosures nest") {
    Interval prev = full_measure_bounds(0, BoundSource::art);
    CHECK(prev == Interval(Rational(5, 6) - Rational(3, 2) * Rational(1, 63), Rational(5, 6)));
    Rational prev_value = art_estimate(0).set_measure;
    for (unsigned n = 1; n <= 10; ++n) {
      const Rational v = art_estimate(n).set_measure;
      CHECK(v <= prev_value);
      const Interval cur = full_measure_bounds(n, BoundSource::art);
      CHECK(prev.contains(cur));
      prev = cur;
      prev_value = v;
    }
    // The finest enclosure overlaps the certified theorem interval.
    const auto cert = certificate::build_certificate(certificate::Target::full);
    CHECK(prev.intersects(cert.enclosure()));
  }

  TEST_CASE("fast bracket at n = 0 and n = 1") {
    for (unsigned K : {1u, 4u}) {
      const auto b = fast_estimate(0, K);
      CHECK(b.lower == Rational(5, 9));
      CHECK(b.upper == Rational(5, 9));
    }
    const Rational level1 = Rational(175, 324);
    CHECK(level1 == Rational(5, 9) - Rational(5, 324));
    for (unsigned K = 1; K <= 10; ++K) {
      const auto b = fast_estimate(1, K);
      const auto s = subdivision::fast_subdivision(1, subdivision::TruncationPolicy(K));
      CHECK(b.lower == oracle::total_length(oracle::pairwise_product(s.inner.intervals(), s.inner.intervals())));
      CHECK(b.upper == oracle::total_length(oracle::pairwise_product(s.outer.intervals(), s.outer.intervals())));
      if (K >= 2) {
        CHECK(b.lower <= level1);
        CHECK(level1 <= b.upper);
      }
    }
  }

  TEST_CASE("fast brackets tighten with the gap depth") {
    for (unsigned n = 1; n <= 2; ++n) {
      FastBracket prev = fast_estimate(n, 1);
      for (unsigned K = 2; K <= (n == 1 ? 10u : 7u); ++K) {
        const FastBracket b = fast_estimate(n, K);
        CHECK(prev.lower <= b.lower);
        CHECK(b.lower <= b.upper);
        CHECK(b.upper <= prev.upper);
        prev = b;
      }
    }
  }

  TEST_CASE("fast bracket contains the symbolic level-two value") {
    const Rational level2 = Rational(5, 9) - gaps::removed_measure_chain().level2;
    for (unsigned K = 3; K <= 7; ++K) {
      const auto b = fast_estimate(2, K);
      CHECK(b.lower <= level2);
      CHECK(level2 <= b.upper);
    }
  }

  TEST_CASE("limits are enforced") {
    CHECK_THROWS_AS(fast_estimate(4, 4), Error);
    CHECK_THROWS_AS(fast_estimate(1, 11), Error);
    CHECK_THROWS_AS(fast_estimate(1, 0), Error);
  }

  TEST_CASE("full measure bounds") {
    const Rational x(7, 13);
    CHECK(full_measure_bounds(Interval(x, x), Rational(0)) == Interval(Rational(21, 26), Rational(21, 26)));
    CHECK(standard_tail(2) == Rational(4, 81 * 63));
    CHECK(fast_tail(3) == Rational(1, 63 * 46656));

    const Rational center(91782451, 113374080), radius(11, 7 * 16 * 177147);
    const Interval symbolic = full_measure_bounds(3, BoundSource::fast_symbolic);
    CHECK(Interval(center - radius, center + radius).contains(symbolic));
    for (unsigned n = 0; n <= 2; ++n) CHECK(full_measure_bounds(n, BoundSource::fast_symbolic).contains(symbolic));
    CHECK_THROWS_AS(full_measure_bounds(4, BoundSource::fast_symbolic), Error);

    const Interval brute = full_measure_bounds(1, BoundSource::fast_bruteforce, 8);
    CHECK(brute.intersects(symbolic));
    CHECK(full_measure_bounds(1, BoundSource::fast_symbolic).contains(Rational(3, 2) * Rational(175, 324)));
  }
}
