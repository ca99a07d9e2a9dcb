#pragma once

#include <vector>

#include "cantorprod/rational.hpp"

namespace cantorprod {

/// coeff * k_ratio^k * m_ratio^m
struct ExpTerm {
  Rational coeff;
  Rational k_ratio{1};
  Rational m_ratio{1};

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// Exact exponential polynomial in two integer indices k and m: a finite sum
/// of ExpTerm. Sums over m and k are taken in closed form, so infinite
/// geometric series never need truncating. Terms are kept canonical (like
/// ratios merged, zeros dropped, sorted), so equality is structural.
class ExpSeries {
 public:
  ExpSeries() = default;

  static ExpSeries term(Rational coeff, Rational k_ratio = Rational(1), Rational m_ratio = Rational(1));
  static ExpSeries constant(Rational c) { return term(std::move(c)); }

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool depends_on_m() const;

  Rational eval(long k, long m = 0) const;

  /// Sum over m = m0, m0+1, ... (every m-dependent ratio must lie in (-1,1)).
  ExpSeries sum_m_to_infinity(long m0) const;
  /// Sum over m0 <= m <= k + offset. Valid for every k with k + offset + 1 >= m0.
  ExpSeries sum_m_to_k_plus(long m0, long offset) const;
  /// Sum over k = k0, k0+1, ...; the series must not depend on m.
  Rational sum_k_to_infinity(long k0) const;

  ExpSeries& operator+=(const ExpSeries& rhs);
  ExpSeries& operator-=(const ExpSeries& rhs);
  ExpSeries& operator*=(const ExpSeries& rhs);
  friend ExpSeries operator+(ExpSeries a, const ExpSeries& b) { return a += b; }
  friend ExpSeries operator-(ExpSeries a, const ExpSeries& b) { return a -= b; }
  friend ExpSeries operator*(ExpSeries a, const ExpSeries& b) { return a *= b; }
  friend ExpSeries operator*(ExpSeries a, const Rational& c) { return a *= ExpSeries::constant(c); }

  friend bool operator==(const ExpSeries&, const ExpSeries&) = default;

 private:
  void canonicalize();
  std::vector<ExpTerm> terms_;
};

}  // namespace cantorprod
