#pragma once
// Independent reference implementations used only by the tests. They share
// nothing with the library beyond Rational and Interval.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cantorprod/interval_set.hpp"

namespace oracle {

using cantorprod::Integer;
using cantorprod::Interval;
using cantorprod::Rational;

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::uint64_t bits(std::uint64_t limit) { return std::uniform_int_distribution<std::uint64_t>(0, limit - 1)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Rational in [lo, hi] with denominator at most max_den.
  Rational rational(const Rational& lo, const Rational& hi, long max_den) {
    const long d = uniform(1, max_den);
    const Integer a = (lo * Rational(d)).floor() + 1, b = (hi * Rational(d)).floor();
    if (b < a) return lo;
    const long span = Integer(b - a).get_si();
    return Rational(Integer(a + uniform(0, span)), Integer(d));
  }

  /// Triadic interval [m/3^k, (m+1)/3^k] inside [2/3, 1].
  Interval triadic_in_right_half(unsigned k) {
    const long base = 2 * pow3l(k - 1), count = pow3l(k - 1);
    const long m = base + uniform(0, count - 1);
    return Interval(Rational(m, pow3l(k)), Rational(m + 1, pow3l(k)));
  }

  std::mt19937_64& engine() { return rng_; }

  static long pow3l(unsigned k) {
    long p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 3;
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// Sort and merge closed intervals, written independently of IntervalSet.
inline std::vector<Interval> merge(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

inline Rational total_length(const std::vector<Interval>& v) {
  Rational s;
  for (const auto& iv : v) s += iv.hi - iv.lo;
  return s;
}

/// P(S x T) by enumerating every pair of components.
inline std::vector<Interval> pairwise_product(const std::vector<Interval>& s, const std::vector<Interval>& t) {
  std::vector<Interval> raw;
  for (const auto& a : s)
    for (const auto& b : t) raw.emplace_back(a.lo * b.lo, a.hi * b.hi);
  return merge(std::move(raw));
}

/// Level-n intervals of the Cantor set from their ternary words in {0, 2}^n.
inline std::vector<Interval> cantor_level(unsigned n) {
  std::vector<Interval> out;
  const long len = Gen::pow3l(n);
  for (long word = 0; word < (1L << n); ++word) {
    long m = 0;
    for (unsigned i = 0; i < n; ++i) m = 3 * m + ((word >> (n - 1 - i)) & 1) * 2;
    out.emplace_back(Rational(m, len), Rational(m + 1, len));
  }
  return out;
}

/// Level-n intervals of the Cantor set that lie in [2/3, 1].
inline std::vector<Interval> cantor_level_right(unsigned n) {
  std::vector<Interval> out;
  for (const auto& iv : cantor_level(n))
    if (Rational(2, 3) <= iv.lo) out.push_back(iv);
  return out;
}

/// Cantor set membership by ternary long division with cycle detection.
/// Either expansion of a triadic rational may be used.
inline bool cantor_member(const Rational& x) {
  if (x < Rational(0) || Rational(1) < x) return false;
  if (x == Rational(1)) return true;
  const Integer den = x.denominator();
  Integer rem = x.numerator();
  std::map<std::string, bool> seen;
  for (;;) {
    const std::string key = rem.get_str();
    if (seen.count(key)) return true;
    seen[key] = true;
    rem *= 3;
    const Integer digit = rem / den;
    rem -= digit * den;
    // A terminating expansion is fine even if it ends in 1: 0.x1 = 0.x0222...
    if (rem == 0) return true;
    if (digit == 1) return false;
  }
}

}  // namespace oracle
