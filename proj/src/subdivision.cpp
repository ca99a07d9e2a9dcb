#include "cantorprod/subdivision.hpp"

#include <algorithm>

namespace cantorprod::subdivision {

Interval TriadicInterval::to_interval() const {
  const Integer den = pow3(k);
  return Interval(Rational(m, den), Rational(m + 1, den));
}

const char* side_name(Side s) { return s == Side::minus ? "minus" : "plus"; }

FastNode root_node() { return FastNode{TriadicInterval{Integer(2), 1}, Integer(2), 0}; }

TruncationPolicy::TruncationPolicy(unsigned gap_depth_, TailHandling tails_) : gap_depth(gap_depth_), tails(tails_) {
  if (gap_depth == 0) throw Error("truncation policy needs gap depth >= 1");
}

namespace {

void check_limit(unsigned n, unsigned limit) {
  if (n > limit) throw Error("subdivision level " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
}

std::vector<Integer> standard_numerators(unsigned n) {
  std::vector<Integer> ms{Integer(0)};
  for (unsigned level = 0; level < n; ++level) {
    std::vector<Integer> next;
    next.reserve(ms.size() * 2);
    for (const auto& m : ms) {
      next.push_back(3 * m);
      next.push_back(3 * m + 2);
    }
    ms = std::move(next);
  }
  return ms;
}

IntervalSet cells_to_set(const std::vector<Integer>& ms, unsigned n) {
  const Integer den = pow3(n);
  std::vector<Interval> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.emplace_back(Rational(m, den), Rational(m + 1, den));
  return IntervalSet::from_sorted(std::move(out));
}

}  // namespace

IntervalSet standard_subdivision(unsigned n, unsigned limit) {
  check_limit(n, limit);
  return cells_to_set(standard_numerators(n), n);
}

IntervalSet right_half_subdivision(unsigned n, unsigned limit) {
  check_limit(n, limit);
  auto ms = standard_numerators(n + 1);
  const Integer cut = 2 * pow3(n);
  std::erase_if(ms, [&](const Integer& m) { return m < cut; });
  return cells_to_set(ms, n + 1);
}

IntervalSet gap_set(unsigned gap_depth) {
  std::vector<Interval> gaps{Interval(Rational(1, 3), Rational(2, 3))};
  for (unsigned k = 1; k <= gap_depth; ++k) {
    const Integer den = pow3(k + 1);
    gaps.emplace_back(Rational(Integer(1), den), Rational(Integer(2), den));
    gaps.emplace_back(Rational(den - 2, den), Rational(den - 1, den));
  }
  return IntervalSet::normalize(std::move(gaps));
}

FastNode child(const FastNode& node, unsigned k, Side side) {
  if (k == 0) throw Error("child index must be >= 1");
  const Integer scale = pow3(k + 1);
  const Integer m = side == Side::minus ? Integer(scale * node.q + 2) : Integer(scale * (node.q + 1) - 3);
  return FastNode{TriadicInterval{m, node.cell.k + k + 1}, m, node.depth + 1};
}

std::vector<FastNode> node_children(const FastNode& node, unsigned gap_depth) {
  std::vector<FastNode> out;
  out.reserve(2 * gap_depth);
  for (unsigned k = gap_depth; k >= 1; --k) out.push_back(child(node, k, Side::minus));
  for (unsigned k = 1; k <= gap_depth; ++k) out.push_back(child(node, k, Side::plus));
  return out;
}

std::pair<Interval, Interval> node_tails(const FastNode& node, unsigned gap_depth) {
  const Rational edge = inv_pow3(gap_depth + 1);
  return {node.sub(Rational(0), edge), node.sub(Rational(1) - edge, Rational(1))};
}

std::vector<FastNode> fast_nodes(unsigned n, unsigned gap_depth) {
  std::vector<FastNode> level{root_node()};
  for (unsigned d = 0; d < n; ++d) {
    std::vector<FastNode> next;
    next.reserve(level.size() * 2 * gap_depth);
    for (const auto& node : level) {
      auto kids = node_children(node, gap_depth);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    level = std::move(next);
  }
  return level;
}

FastSubdivision fast_subdivision(unsigned n, const TruncationPolicy& policy) {
  const unsigned K = policy.gap_depth;
  if (K == 0) throw Error("truncation policy needs gap depth >= 1");
  std::vector<FastNode> level{root_node()};
  std::vector<Interval> tails;
  for (unsigned d = 0; d < n; ++d) {
    std::vector<FastNode> next;
    next.reserve(level.size() * 2 * K);
    for (const auto& node : level) {
      auto [left, right] = node_tails(node, K);
      tails.push_back(std::move(left));
      tails.push_back(std::move(right));
      auto kids = node_children(node, K);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    level = std::move(next);
  }
  std::vector<Interval> cells;
  cells.reserve(level.size());
  for (const auto& node : level) cells.push_back(node.interval());

  FastSubdivision out;
  out.inner = IntervalSet::normalize(cells);
  cells.insert(cells.end(), tails.begin(), tails.end());
  out.outer = IntervalSet::normalize(std::move(cells));
  out.nodes = std::move(level);
  return out;
}

SquaredLengthSum squared_length_sum(unsigned n, const TruncationPolicy& policy) {
  SquaredLengthSum out;
  for (const auto& node : fast_nodes(n, policy.gap_depth)) {
    const Rational len = node.length();
    out.truncated += len * len;
  }
  out.exact_limit = Rational(1, 9) * Rational(1, 36).pow(n);
  return out;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::member:
      return "member";
    case Membership::non_member:
      return "non_member";
    default:
      return "undetermined";
  }
}

MembershipResult cantor_membership(const Rational& x, std::size_t max_digits) {
  if (x < Rational(0) || Rational(1) < x) throw Error("membership query outside [0,1]: " + x.to_string());
  MembershipResult out;
  if (x == Rational(1)) {
    out.verdict = Membership::member;
    out.period = "2";
    return out;
  }
  const Integer den = x.denominator();
  Integer rem = x.numerator();
  Integer reduced = den;
  std::size_t threes = 0;
  while (reduced % 3 == 0) {
    reduced /= 3;
    ++threes;
  }

  bool saw_one = false;
  auto next_digit = [&]() {
    rem *= 3;
    const Integer d = rem / den;
    rem %= den;
    ++out.digits_examined;
    const char c = static_cast<char>('0' + d.get_ui());
    if (c == '1') saw_one = true;
    return c;
  };

  // The first `threes` digits are the preperiod; after them the remainder
  // is coprime-periodic and returns to itself after one full period.
  for (std::size_t i = 0; i < threes; ++i) {
    if (out.digits_examined >= max_digits) {
      out.verdict = saw_one ? Membership::non_member : Membership::undetermined;
      return out;
    }
    out.preperiod += next_digit();
  }

  if (reduced == 1) {
    // Terminating expansion: 0.d1...ds 000... or 0.d1...(ds-1) 222...
    out.period = "0";
    const std::string& d = out.preperiod;
    const bool finite_ok = d.find('1') == std::string::npos;
    bool alt_ok = false;
    if (!d.empty() && d.back() == '1') alt_ok = d.substr(0, d.size() - 1).find('1') == std::string::npos;
    if (alt_ok && !finite_ok) {
      out.preperiod.back() = '0';
      out.period = "2";
    }
    out.verdict = (finite_ok || alt_ok) ? Membership::member : Membership::non_member;
    return out;
  }

  const Integer anchor = rem;
  do {
    if (out.digits_examined >= max_digits) {
      out.verdict = saw_one ? Membership::non_member : Membership::undetermined;
      out.period.clear();
      return out;
    }
    out.period += next_digit();
  } while (rem != anchor);
  out.verdict = saw_one ? Membership::non_member : Membership::member;
  return out;
}

}  // namespace cantorprod::subdivision
