#include "cantorprod/certificate.hpp"

#include <algorithm>

namespace cantorprod::certificate {

const char* target_name(Target t) { return t == Target::level3 ? "prop3" : "theorem"; }

Target parse_target(std::string_view name) {
  if (name == "prop3") return Target::level3;
  if (name == "theorem") return Target::full;
  throw Error("unknown certificate target: " + std::string(name));
}

bool Certificate::valid() const {
  return radius > Rational(0) &&
         std::all_of(chain.begin(), chain.end(), [](const ChainEntry& e) { return e.match; });
}

namespace {

// The correction term left over when the branch budgets are summed, as it is
// displayed term by term.
Rational displayed_epsilon() {
  const ExpSeries terms = ExpSeries::term(Rational(91, 20) * inv_pow9(6), Rational(1, 81)) -
                          ExpSeries::term((Rational(1, 40) + Rational(6643)) * inv_pow9(10), Rational(1, 6561));
  return terms.sum_k_to_infinity(1) / 8;
}

}  // namespace

const LiteralTable& reference_literals() {
  static const LiteralTable table = [] {
    LiteralTable t;
    t["mu1"] = Rational(5, 4 * 81);
    t["mu2_minus_mu1"] = Rational(Integer(859), ipow(9, 4) * 5 * 64);
    t["corner_gap_budget"] = Rational(5, 4) * inv_pow9(6) - Rational(1, 8) * inv_pow9(10);
    t["branch_sum_leading"] = Rational(157, 32) * inv_pow9(6);
    t["epsilon_upper"] = Rational(1, 128) * inv_pow9(6);
    t["corner_tail"] = Rational(1, 64) * inv_pow9(6);
    t["five_ninths_minus_M"] = Rational(91782451, 170061120) + Rational(1, 8) * inv_pow9(10);
    t["level3_center"] = Rational(91782451, 170061120);
    t["level3_radius"] = Rational(1, 64) * inv_pow9(6);
    t["fast_tail_3"] = Rational(Integer(1), 63 * ipow(36, 3));
    t["theorem_center"] = Rational(91782451, 113374080);
    t["theorem_radius"] = Rational(Integer(11), 7 * 16 * pow3(11));
    t["radius_limit"] = Rational(Integer(1), ipow(10, 6));
    return t;
  }();
  return table;
}

namespace {

class ChainWriter {
 public:
  explicit ChainWriter(const LiteralTable& literals) : literals_(literals) {}

  const Rational& literal(const std::string& name) const {
    const auto it = literals_.find(name);
    if (it == literals_.end()) throw Error("missing literal: " + name);
    return it->second;
  }

  void equal(const std::string& name, const Rational& value) {
    const Rational& lit = literal(name);
    chain.push_back({name, value, lit, value == lit});
  }

  // value lies strictly inside (0, literal)
  void below(const std::string& name, const Rational& value, bool strictly_positive) {
    const Rational& lit = literal(name);
    const bool ok = value < lit && (!strictly_positive || Rational(0) < value);
    chain.push_back({name, value, lit, ok});
  }

  std::vector<ChainEntry> chain;

 private:
  const LiteralTable& literals_;
};

Rational max_abs(const Rational& a, const Rational& b) {
  const Rational x = a.sign() < 0 ? -a : a;
  const Rational y = b.sign() < 0 ? -b : b;
  return x < y ? y : x;
}

void check_branch_closed_forms() {
  const auto& b = gaps::branch_budgets();
  // beta_k = (1/64)(20/9^{k+4} - (91/5)/9^{2k+6} + (1/10)/9^{4k+10})
  const ExpSeries right = ExpSeries::term(Rational(20, 64) * inv_pow9(4), Rational(1, 9)) -
                          ExpSeries::term(Rational(91, 5 * 64) * inv_pow9(6), Rational(1, 81)) +
                          ExpSeries::term(Rational(1, 640) * inv_pow9(10), Rational(1, 6561));
  if (!(b.right == right)) throw CertificationError("right branch budget does not match its closed form");
  ExpSeries removed;
  for (long j = 3; j <= 5; ++j) {
    const Rational w = inv_pow9(j);
    removed += ExpSeries::term(w * Rational(10, 9) / 8, Rational(1, 81)) -
               ExpSeries::term(w * w / 8, Rational(1, 6561));
  }
  if (!(b.left == right - removed)) throw CertificationError("left branch budget does not match its closed form");
}

}  // namespace

Certificate build_certificate(Target target, const LiteralTable& literals, unsigned digits) {
  check_branch_closed_forms();
  const auto& mu = gaps::removed_measure_chain();
  ChainWriter w(literals);

  const Rational gamma1 = gaps::corner_gap_budget();
  const Rational eps = displayed_epsilon();
  w.equal("mu1", mu.level1);
  w.equal("mu2_minus_mu1", mu.level2 - mu.level1);
  w.equal("corner_gap_budget", gamma1);
  w.equal("branch_sum_leading", mu.branch_sum + eps);
  w.below("epsilon_upper", eps, true);
  const Rational tail = mu.level3_upper - mu.level3_lower;
  w.equal("corner_tail", tail);

  // M = mu_2 + gamma_1 + leading term; the measure of P(D_3 x D_3) is
  // 5/9 - mu_3 with mu_3 in [mu3_lower, mu3_upper].
  const Rational M = mu.level2 + gamma1 + mu.branch_sum + eps;
  w.equal("five_ninths_minus_M", Rational(5, 9) - M);
  // The center keeps only the untruncated corner term (5/36)|C|^2 of gamma_1.
  const auto root = subdivision::root_node();
  const auto corner = subdivision::child(subdivision::child(root, 1, gaps::Side::minus), 1, gaps::Side::plus);
  const Rational center = Rational(5, 9) - (mu.level2 + gaps::gap_measure_limit(corner.length()) + mu.branch_sum + eps);
  w.equal("level3_center", center);
  const Interval level3(Rational(5, 9) - mu.level3_upper, Rational(5, 9) - mu.level3_lower);
  const Rational radius = tail;
  if (radius < max_abs(level3.lo - center, level3.hi - center))
    throw CertificationError("level-3 enclosure is not centred within its radius");
  w.equal("level3_radius", radius);

  Certificate out;
  out.target = target;
  out.center = center;
  out.radius = radius;
  if (target == Target::full) {
    // Squared lengths shrink by sum_k 2/9^{k+1} per level.
    const Rational ratio = 2 * ExpSeries::term(Rational(1, 9), Rational(1, 9)).sum_k_to_infinity(1);
    const Rational level_tail = ExpSeries::term(Rational(5, 36) * Rational(1, 9), ratio).sum_k_to_infinity(3);
    w.equal("fast_tail_3", level_tail);
    out.center = Rational(3, 2) * center;
    out.radius = Rational(3, 2) * (radius + level_tail);
    w.equal("theorem_center", out.center);
    w.equal("theorem_radius", out.radius);
    w.below("radius_limit", out.radius, true);
  }
  out.chain = std::move(w.chain);
  out.decimal_center = out.center.to_decimal(digits);
  return out;
}

Certificate certify(Target target, const LiteralTable& literals, unsigned digits) {
  Certificate c = build_certificate(target, literals, digits);
  for (const auto& e : c.chain)
    if (!e.match)
      throw CertificationError("certificate identity failed: " + e.name + " (derived " + e.value.to_string() +
                               ", expected " + e.literal.to_string() + ")");
  if (!(c.radius > Rational(0))) throw CertificationError("certificate radius is not positive");
  return c;
}

}  // namespace cantorprod::certificate
