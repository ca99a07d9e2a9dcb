#pragma once

#include <chrono>

#include "cantorprod/product_image.hpp"
#include "cantorprod/subdivision.hpp"

namespace cantorprod::product {

/// Measure of P(S x S) for S inside (0, inf).
Rational self_product_measure(const IntervalSet& s, const ProductOptions& options = {});

struct EstimateResult {
  unsigned n = 0;
  Rational set_measure;  // measure of P(R_n x R_n)
  Rational tail_bound;   // (1/63)(2/9)^n
  Rational full_value;   // (3/2) set_measure, upper bound for the full Cantor product
  std::size_t component_count = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Standard-subdivision estimate of the product-set measure.
EstimateResult art_estimate(unsigned n, const ProductOptions& options = {});

struct FastLimits {
  unsigned max_n = 3;
  unsigned max_gap_depth = 10;
};

struct FastBracket {
  unsigned n = 0;
  unsigned gap_depth = 0;
  Rational lower;  // measure of P(inner x inner)
  Rational upper;  // measure of P(outer x outer)
  std::size_t inner_components = 0;
  std::size_t outer_components = 0;
  std::size_t inner_product_components = 0;
  std::size_t outer_product_components = 0;
  std::chrono::milliseconds elapsed{0};

  Rational width() const { return upper - lower; }
};

/// Two-sided bracket for the measure of P(D_n x D_n) from the inner and outer
/// truncations at gap depth K.
FastBracket fast_estimate(unsigned n, unsigned gap_depth, const ProductOptions& options = {},
                          const FastLimits& limits = {});

/// (1/63)(2/9)^n.
Rational standard_tail(unsigned n);
/// (1/63)(1/36)^n.
Rational fast_tail(unsigned n);

/// Enclosure of the full Cantor product measure, (3/2) of the right-half
/// measure, from an enclosure [lo, hi] of a subdivision's product measure that
/// overestimates the limit by at most `tail`.
Interval full_measure_bounds(const Interval& subdivision_bracket, const Rational& tail);

enum class BoundSource { art, fast_symbolic, fast_bruteforce };

/// Enclosure of the full product measure from one of the estimate pipelines.
/// fast_symbolic supports n <= 3; fast_bruteforce uses gap depth K.
Interval full_measure_bounds(unsigned n, BoundSource source, unsigned gap_depth = 8,
                             const ProductOptions& options = {});

}  // namespace cantorprod::product
