#include "cantorprod/product_measure.hpp"

#include "cantorprod/gap_calculus.hpp"

namespace cantorprod::product {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

Rational self_product_measure(const IntervalSet& s, const ProductOptions& options) {
  return product_image_summary(s, s, options).measure;
}

EstimateResult art_estimate(unsigned n, const ProductOptions& options) {
  const auto start = Clock::now();
  const IntervalSet r = subdivision::right_half_subdivision(n);
  const ProductSummary p = product_image_summary(r, r, options);
  EstimateResult out;
  out.n = n;
  out.set_measure = p.measure;
  out.tail_bound = standard_tail(n);
  out.full_value = Rational(3, 2) * p.measure;
  out.component_count = p.component_count;
  out.elapsed = since(start);
  return out;
}

FastBracket fast_estimate(unsigned n, unsigned gap_depth, const ProductOptions& options, const FastLimits& limits) {
  if (n > limits.max_n) throw Error("fast estimate n=" + std::to_string(n) + " exceeds limit " + std::to_string(limits.max_n));
  if (gap_depth == 0 || gap_depth > limits.max_gap_depth)
    throw Error("gap depth K=" + std::to_string(gap_depth) + " outside [1, " + std::to_string(limits.max_gap_depth) + "]");
  const auto start = Clock::now();
  const auto sub = subdivision::fast_subdivision(n, subdivision::TruncationPolicy(gap_depth));
  const ProductSummary inner = product_image_summary(sub.inner, sub.inner, options);
  const ProductSummary outer = product_image_summary(sub.outer, sub.outer, options);
  FastBracket out;
  out.n = n;
  out.gap_depth = gap_depth;
  out.lower = inner.measure;
  out.upper = outer.measure;
  out.inner_components = sub.inner.size();
  out.outer_components = sub.outer.size();
  out.inner_product_components = inner.component_count;
  out.outer_product_components = outer.component_count;
  out.elapsed = since(start);
  return out;
}

Rational standard_tail(unsigned n) { return Rational(1, 63) * Rational(2, 9).pow(n); }

Rational fast_tail(unsigned n) { return Rational(1, 63) * Rational(1, 36).pow(n); }

Interval full_measure_bounds(const Interval& subdivision_bracket, const Rational& tail) {
  return Interval(Rational(3, 2) * (subdivision_bracket.lo - tail), Rational(3, 2) * subdivision_bracket.hi);
}

Interval full_measure_bounds(unsigned n, BoundSource source, unsigned gap_depth, const ProductOptions& options) {
  switch (source) {
    case BoundSource::art: {
      const Rational m = art_estimate(n, options).set_measure;
      return full_measure_bounds(Interval(m, m), standard_tail(n));
    }
    case BoundSource::fast_symbolic: {
      const auto& mu = gaps::removed_measure_chain();
      const Rational whole(5, 9);
      Interval bracket;
      switch (n) {
        case 0:
          bracket = Interval(whole, whole);
          break;
        case 1:
          bracket = Interval(whole - mu.level1, whole - mu.level1);
          break;
        case 2:
          bracket = Interval(whole - mu.level2, whole - mu.level2);
          break;
        case 3:
          bracket = Interval(whole - mu.level3_upper, whole - mu.level3_lower);
          break;
        default:
          throw Error("symbolic bounds are available for n <= 3");
      }
      return full_measure_bounds(bracket, fast_tail(n));
    }
    default: {
      const FastBracket b = fast_estimate(n, gap_depth, options);
      return full_measure_bounds(Interval(b.lower, b.upper), fast_tail(n));
    }
  }
}

}  // namespace cantorprod::product
