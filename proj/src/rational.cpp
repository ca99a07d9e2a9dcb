#include "cantorprod/rational.hpp"

#include <ostream>

namespace cantorprod {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) throw Error("malformed rational: '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("malformed rational (zero denominator): '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error("zero raised to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
  Integer num = abs(value_.get_num());
  const Integer den = value_.get_den();
  Integer whole = num / den;
  Integer rem = num % den;
  std::string out = sign() < 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
      rem *= 10;
      const Integer d = rem / den;
      rem %= den;
      out += static_cast<char>('0' + d.get_ui());
    }
  }
  if (rem != 0) out += "...";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer pow3(unsigned long e) { return ipow(3, e); }

Integer ipow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Rational inv_pow3(unsigned long e) { return Rational(Integer(1), pow3(e)); }

Rational inv_pow9(unsigned long e) { return Rational(Integer(1), ipow(9, e)); }

}  // namespace cantorprod
