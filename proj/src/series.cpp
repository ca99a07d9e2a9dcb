#include "cantorprod/series.hpp"

#include <algorithm>

namespace cantorprod {

namespace {

bool inside_unit(const Rational& r) { return Rational(-1) < r && r < Rational(1); }

}  // namespace

ExpSeries ExpSeries::term(Rational coeff, Rational k_ratio, Rational m_ratio) {
  ExpSeries s;
  s.terms_.push_back({std::move(coeff), std::move(k_ratio), std::move(m_ratio)});
  s.canonicalize();
  return s;
}

bool ExpSeries::depends_on_m() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return t.m_ratio != Rational(1); });
}

Rational ExpSeries::eval(long k, long m) const {
  Rational total;
  for (const auto& t : terms_) total += t.coeff * t.k_ratio.pow(k) * t.m_ratio.pow(m);
  return total;
}

ExpSeries ExpSeries::sum_m_to_infinity(long m0) const {
  ExpSeries out;
  for (const auto& t : terms_) {
    if (!inside_unit(t.m_ratio)) throw Error("divergent sum over m");
    out.terms_.push_back({t.coeff * t.m_ratio.pow(m0) / (Rational(1) - t.m_ratio), t.k_ratio, Rational(1)});
  }
  out.canonicalize();
  return out;
}

ExpSeries ExpSeries::sum_m_to_k_plus(long m0, long offset) const {
  ExpSeries out;
  for (const auto& t : terms_) {
    const Rational& b = t.m_ratio;
    if (b == Rational(1)) throw Error("sum over m with k-dependent bound needs a non-unit ratio");
    // sum_{m=m0}^{k+offset} b^m = (b^m0 - b^(offset+1) b^k) / (1 - b)
    const Rational denom = Rational(1) - b;
    out.terms_.push_back({t.coeff * b.pow(m0) / denom, t.k_ratio, Rational(1)});
    out.terms_.push_back({-(t.coeff * b.pow(offset + 1) / denom), t.k_ratio * b, Rational(1)});
  }
  out.canonicalize();
  return out;
}

Rational ExpSeries::sum_k_to_infinity(long k0) const {
  if (depends_on_m()) throw Error("sum over k of an m-dependent series");
  Rational total;
  for (const auto& t : terms_) {
    if (!inside_unit(t.k_ratio)) throw Error("divergent sum over k");
    total += t.coeff * t.k_ratio.pow(k0) / (Rational(1) - t.k_ratio);
  }
  return total;
}

ExpSeries& ExpSeries::operator+=(const ExpSeries& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

ExpSeries& ExpSeries::operator-=(const ExpSeries& rhs) {
  for (const auto& t : rhs.terms_) terms_.push_back({-t.coeff, t.k_ratio, t.m_ratio});
  canonicalize();
  return *this;
}

ExpSeries& ExpSeries::operator*=(const ExpSeries& rhs) {
  std::vector<ExpTerm> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) out.push_back({a.coeff * b.coeff, a.k_ratio * b.k_ratio, a.m_ratio * b.m_ratio});
  terms_ = std::move(out);
  canonicalize();
  return *this;
}

void ExpSeries::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const ExpTerm& a, const ExpTerm& b) {
    if (a.k_ratio != b.k_ratio) return a.k_ratio < b.k_ratio;
    return a.m_ratio < b.m_ratio;
  });
  std::vector<ExpTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().k_ratio == t.k_ratio && merged.back().m_ratio == t.m_ratio)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const ExpTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

}  // namespace cantorprod
