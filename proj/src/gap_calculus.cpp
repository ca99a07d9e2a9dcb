#include "cantorprod/gap_calculus.hpp"

#include <functional>
#include <optional>

namespace cantorprod::gaps {

using subdivision::child;
using subdivision::root_node;

namespace {

Rational third_pow(unsigned e) { return inv_pow3(e); }

Rational product(const FastNode& node, const Rational& x, const Rational& y) { return node.chart(x) * node.chart(y); }

}  // namespace

Interval offdiagonal_image(const FastNode& node, unsigned k, Side side) {
  const Rational a = third_pow(k);
  const Rational b = third_pow(k + 1);
  if (side == Side::minus) return Interval(product(node, 2 * b, 0), product(node, a, b));
  return Interval(product(node, 1 - b, 1 - a), product(node, 1, 1 - 2 * b));
}

Interval diagonal_cell_image(const FastNode& node, unsigned k, Side side) {
  if (k == 0) throw Error("diagonal cell images need index k >= 1");
  const Rational a = third_pow(k);
  const Rational b = third_pow(k + 1);
  const Interval d = side == Side::minus ? node.sub(2 * b, a) : node.sub(1 - a, 1 - 2 * b);
  return Interval(d.lo * d.lo, d.hi * d.hi);
}

Interval diagonal_gap(const FastNode& node, unsigned k, Side side) {
  const Rational a = third_pow(k);
  const Rational lo = side == Side::minus ? node.chart(0) : node.chart(1 - a);
  const Rational t = node.length() * third_pow(k + 1);
  const Rational mid = lo + 2 * t;
  return Interval(mid * mid - t * t, mid * mid);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::offdiagonal:
      return "offdiagonal";
    case Family::diagonal_cell:
      return "diagonal_cell";
    default:
      return "diagonal_gap";
  }
}

FamilyKind FamilyKind::canonical() const {
  FamilyKind out = *this;
  if (k == 0 && family != Family::diagonal_cell) out.side = Side::minus;
  return out;
}

Interval family_interval(const FastNode& node, const FamilyKind& kind) {
  switch (kind.family) {
    case Family::offdiagonal:
      return offdiagonal_image(node, kind.k, kind.side);
    case Family::diagonal_cell:
      return diagonal_cell_image(node, kind.k, kind.side);
    default:
      return diagonal_gap(node, kind.k, kind.side);
  }
}

std::strong_ordering compare_products(const FastNode& node, const Rational& x, const Rational& y, const Rational& z,
                                      const Rational& t) {
  // A(x)A(y) - A(z)A(t) = |I|^2 (q(x + y - z - t) + xy - zt)
  const Rational diff = Rational(node.q) * (x + y - z - t) + x * y - z * t;
  return diff <=> Rational(0);
}

bool ChainReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.holds || !c.consistent) return false;
  return true;
}

namespace {

enum class Rel { lt, le, eq };

struct Factors {
  Rational x, y;
};

class ChainBuilder {
 public:
  explicit ChainBuilder(const FastNode& node) : node_(node) {}

  // lhs `rel` rhs for two endpoints, each also written as a product A(x)A(y).
  void add(std::string relation, unsigned k, const Rational& lhs, Rel rel, const Rational& rhs, const Factors& l,
           const Factors& r) {
    ChainCheck c;
    c.relation = std::move(relation);
    c.k = k;
    c.holds = satisfies(lhs <=> rhs, rel);
    const bool endpoints_match = lhs == product(node_, l.x, l.y) && rhs == product(node_, r.x, r.y);
    c.consistent = endpoints_match && satisfies(compare_products(node_, l.x, l.y, r.x, r.y), rel) == c.holds;
    report_.checks.push_back(std::move(c));
  }

  ChainReport take() { return std::move(report_); }

 private:
  static bool satisfies(std::strong_ordering o, Rel rel) {
    switch (rel) {
      case Rel::lt:
        return o == std::strong_ordering::less;
      case Rel::le:
        return o != std::strong_ordering::greater;
      default:
        return o == std::strong_ordering::equal;
    }
  }

  const FastNode& node_;
  ChainReport report_;
};

}  // namespace

ChainReport verify_order_chain(const FastNode& node, unsigned k_max) {
  ChainBuilder b(node);
  for (unsigned k = 0; k <= k_max; ++k) {
    const Rational a = third_pow(k), c = third_pow(k + 1), d = third_pow(k + 2);
    const Interval p = offdiagonal_image(node, k, Side::minus);
    const Interval q_next = diagonal_cell_image(node, k + 1, Side::minus);
    const Interval g_next = diagonal_gap(node, k + 1, Side::minus);
    const Interval g = diagonal_gap(node, k, Side::minus);
    const Interval g_plus = diagonal_gap(node, k, Side::plus);
    const Interval q_plus_next = diagonal_cell_image(node, k + 1, Side::plus);

    b.add("sup G(k+1,-) = inf Q(k+1,-)", k, g_next.hi, Rel::eq, q_next.lo, {2 * d, 2 * d}, {2 * d, 2 * d});
    b.add("inf Q(k+1,-) < inf P(k,-)", k, q_next.lo, Rel::lt, p.lo, {2 * d, 2 * d}, {0, 2 * c});
    b.add("inf P(k,-) < sup Q(k+1,-)", k, p.lo, Rel::lt, q_next.hi, {0, 2 * c}, {c, c});
    b.add("sup Q(k+1,-) < sup P(k,-)", k, q_next.hi, Rel::lt, p.hi, {c, c}, {a, c});
    b.add("sup P(k,-) = inf G(k,-)", k, p.hi, Rel::eq, g.lo, {a, c}, {c, a});
    b.add("inf G(k,-) < sup G(k,-)", k, g.lo, Rel::lt, g.hi, {c, a}, {2 * c, 2 * c});
    b.add("sup G(k,-) <= sup G(k,+)", k, g.hi, Rel::le, g_plus.hi, {2 * c, 2 * c}, {1 - c, 1 - c});
    b.add("sup G(k,+) = inf Q(k+1,+)", k, g_plus.hi, Rel::eq, q_plus_next.lo, {1 - c, 1 - c}, {1 - c, 1 - c});
  }
  for (unsigned k = 1; k <= k_max; ++k) {
    const Rational a = third_pow(k), c = third_pow(k + 1);
    const Interval p = offdiagonal_image(node, k, Side::plus);
    const Interval q = diagonal_cell_image(node, k, Side::plus);
    const Interval g = diagonal_gap(node, k, Side::plus);
    const Interval q_next = diagonal_cell_image(node, k + 1, Side::plus);

    b.add("inf Q(k,+) < inf P(k,+)", k, q.lo, Rel::lt, p.lo, {1 - a, 1 - a}, {1 - c, 1 - a});
    b.add("inf P(k,+) < sup Q(k,+)", k, p.lo, Rel::lt, q.hi, {1 - c, 1 - a}, {1 - 2 * c, 1 - 2 * c});
    b.add("sup Q(k,+) < sup P(k,+)", k, q.hi, Rel::lt, p.hi, {1 - 2 * c, 1 - 2 * c}, {1, 1 - 2 * c});
    b.add("sup P(k,+) = inf G(k,+)", k, p.hi, Rel::eq, g.lo, {1, 1 - 2 * c}, {1 - 2 * c, 1});
    b.add("inf G(k,+) < sup G(k,+)", k, g.lo, Rel::lt, g.hi, {1 - 2 * c, 1}, {1 - c, 1 - c});
    b.add("sup G(k,+) = inf Q(k+1,+)", k, g.hi, Rel::eq, q_next.lo, {1 - c, 1 - c}, {1 - c, 1 - c});
  }
  return b.take();
}

unsigned left_cover_threshold(const Integer& q, unsigned k) {
  const Integer bound = 2 * pow3(k) * q + 2;
  unsigned l = 0;
  Integer lhs = 9;  // 3^{l+2}
  while (lhs <= bound) {
    lhs *= 3;
    ++l;
  }
  return l;
}

unsigned right_cover_threshold(const Integer& q, unsigned k) {
  const Integer bound = 2 * pow3(k + 1) * (q + 1) - 4;
  unsigned l = 0;
  Integer lhs = 3;  // 3^{l+1}
  while (lhs <= bound) {
    lhs *= 3;
    ++l;
  }
  return l;
}

Rational truncated_gap_sum(const Rational& length, unsigned depth) {
  if (depth == 0) throw Error("truncated gap sum needs depth >= 1");
  return length * length / 8 * (Rational(10, 9) - inv_pow9(depth));
}

Rational gap_measure_limit(const Rational& length) { return Rational(5, 36) * length * length; }

GapBudget gap_budget(const FastNode& cell, const Interval& covering, unsigned scan) {
  GapBudget out;
  std::optional<unsigned> first_covered;
  Rational uncovered_plus;
  for (unsigned l = 0; l <= scan; ++l) {
    const Interval g = diagonal_gap(cell, l, Side::plus);
    const bool covered = covering.contains(g);
    if (!covered && g.intersects(covering) && !(g.hi == covering.lo || g.lo == covering.hi))
      throw CertificationError("gap " + std::to_string(l) + " is partially covered");
    if (covered && !first_covered) first_covered = l;
    if (!covered && first_covered) throw CertificationError("uncovered gap after a covered one");
    if (!covered) uncovered_plus += g.length();
    out.plus_covered.push_back(covered);
  }
  if (!first_covered) throw CertificationError("no covered gap within the scanned range");
  out.depth = *first_covered;
  // The minus gaps G(cell, l, -), l >= 1, have lengths |cell|^2 / 9^{l+1}.
  const Rational len = cell.length();
  out.total = uncovered_plus + ExpSeries::term(len * len / 9, Rational(1, 9)).sum_k_to_infinity(1);
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw CertificationError("derivation failed: " + what);
}

// Constant c with threshold(k, m) == base(k, m) + c on the whole grid.
long derive_offset(const std::string& what, const std::function<long(unsigned, unsigned)>& threshold,
                   const std::function<long(unsigned, unsigned)>& base, unsigned k_max, unsigned m_max) {
  std::optional<long> offset;
  for (unsigned k = 1; k <= k_max; ++k)
    for (unsigned m = 1; m <= m_max; ++m) {
      const long c = threshold(k, m) - base(k, m);
      if (!offset) offset = c;
      require(*offset == c, what + " is not an affine shift of the index");
    }
  return *offset;
}

enum class Cover { covered, disjoint, partial };

Cover classify(const Interval& cell_square, const Interval& image) {
  if (image.contains(cell_square)) return Cover::covered;
  if (!cell_square.intersects(image)) return Cover::disjoint;
  return Cover::partial;
}

bool disjoint(const Interval& a, const Interval& b) { return !a.intersects(b); }

// How the plus-side cell squares of a child split against the image that
// could cover them: disjoint for m <= k + offset, covered beyond. Returns the
// offset; throws unless the pattern is exactly that for every k checked.
// `partial_at_edge` allows the single index m = k + offset + 1 to be partial
// (its contribution is then bounded separately by the caller).
long derive_cover_offset(const std::string& what, Side side, const std::function<Interval(unsigned)>& covering,
                         bool partial_at_edge, unsigned k_max, unsigned m_extra) {
  const FastNode root = root_node();
  std::optional<long> offset;
  for (unsigned k = 1; k <= k_max; ++k) {
    const FastNode c = child(root, k, side);
    const Interval image = covering(k);
    unsigned last_disjoint = 0;
    std::optional<unsigned> first_covered;
    for (unsigned m = 1; m <= k + m_extra; ++m) {
      const Cover v = classify(diagonal_cell_image(c, m, Side::plus), image);
      if (v == Cover::disjoint && !first_covered) {
        require(last_disjoint + 1 == m, what + ": disjoint cells are not an initial run");
        last_disjoint = m;
      } else if (v == Cover::covered) {
        if (!first_covered) first_covered = m;
      } else if (v == Cover::partial) {
        require(partial_at_edge && !first_covered && m == last_disjoint + 1, what + ": unexpected partial cover");
      } else {
        require(false, what + ": disjoint cell after a covered one");
      }
    }
    require(first_covered.has_value(), what + ": no covered cell found");
    // The covered run extends to every larger index: the squares move up
    // monotonically toward A_C(1)^2, which still lies inside the image.
    const Rational top = c.chart(1) * c.chart(1);
    require(image.contains(top), what + ": accumulation point is not covered");
    const long off = static_cast<long>(last_disjoint) - static_cast<long>(k);
    if (!partial_at_edge) {
      if (!offset) offset = off;
      require(*offset == off, what + ": cover offset depends on k");
    } else {
      // With a partial edge cell the disjoint run ends at k - 1 or k
      const long covered_off = static_cast<long>(*first_covered) - static_cast<long>(k);
      if (!offset) offset = covered_off;
      require(*offset == covered_off, what + ": first covered index depends on k");
    }
  }
  return *offset;
}

// Squared length of the index-m grandchild through the index-k child of the
// root, as a series in (k, m).
ExpSeries grandchild_square() {
  const Rational len = root_node().length();
  return ExpSeries::term(len * len / 81, Rational(1, 9), Rational(1, 9));
}

// Truncated gap sum of cells with squared length `sq` and threshold
// k + m + offset (or k + offset when `with_m` is false).
ExpSeries truncated_budget(const ExpSeries& sq, long offset, bool with_m) {
  const Rational scale = Rational(9).pow(-offset) / 8;
  const ExpSeries cut = ExpSeries::term(scale, Rational(1, 9), with_m ? Rational(1, 9) : Rational(1));
  return sq * Rational(10, 72) - sq * cut;
}

void check_summands(const std::string& what, const ExpSeries& summand,
                    const std::function<Rational(unsigned, unsigned)>& direct, unsigned k_max, unsigned m_max) {
  for (unsigned k = 1; k <= k_max; ++k)
    for (unsigned m = 1; m <= m_max; ++m)
      require(summand.eval(k, m) == direct(k, m), what + ": summand disagrees with the cell at k=" +
                                                      std::to_string(k) + ", m=" + std::to_string(m));
}

constexpr unsigned kGrid = 8;

BranchBudgets derive_branch_budgets() {
  const FastNode root = root_node();
  const ExpSeries sq = grandchild_square();

  auto grandchild = [&](Side branch, unsigned k, unsigned m, Side side) {
    return child(child(root, k, branch), m, side);
  };
  check_summands(
      "grandchild length", sq,
      [&](unsigned k, unsigned m) {
        const Rational len = grandchild(Side::plus, k, m, Side::minus).length();
        require(len == grandchild(Side::minus, k, m, Side::plus).length(), "grandchild lengths differ by side");
        return len * len;
      },
      kGrid, kGrid);

  auto threshold_offset = [&](const std::string& what, Side branch, Side side) {
    return derive_offset(
        what,
        [&](unsigned k, unsigned m) {
          const Integer q = child(root, k, branch).q;
          return static_cast<long>(side == Side::minus ? left_cover_threshold(q, m) : right_cover_threshold(q, m));
        },
        [](unsigned k, unsigned m) { return static_cast<long>(k + m); }, kGrid, kGrid);
  };

  BranchBudgets out;
  for (Side branch : {Side::plus, Side::minus}) {
    const std::string name = branch == Side::plus ? "right branch" : "left branch";
    const long minus_off = threshold_offset(name + " minus threshold", branch, Side::minus);
    const long plus_off = threshold_offset(name + " plus threshold", branch, Side::plus);

    const ExpSeries minus_summand = truncated_budget(sq, minus_off, true);
    const ExpSeries plus_summand = truncated_budget(sq, plus_off, true);
    auto direct = [&](Side side) {
      return [&, side](unsigned k, unsigned m) {
        const FastNode c = child(root, k, branch);
        const unsigned n = side == Side::minus ? left_cover_threshold(c.q, m) : right_cover_threshold(c.q, m);
        return truncated_gap_sum(child(c, m, side).length(), n);
      };
    };
    check_summands(name + " minus budget", minus_summand, direct(Side::minus), kGrid, kGrid);
    check_summands(name + " plus budget", plus_summand, direct(Side::plus), kGrid, kGrid);

    long cut = 0;
    if (branch == Side::plus) {
      // Plus squares of F_k against P(I,k,+); minus squares and the kept plus
      // squares must miss both neighbouring off-diagonal images.
      cut = derive_cover_offset(
          name, branch, [&](unsigned k) { return offdiagonal_image(root, k, Side::plus); }, false, kGrid, 8);
      for (unsigned k = 1; k <= kGrid; ++k) {
        const FastNode f = child(root, k, branch);
        const Interval p0 = offdiagonal_image(root, k - 1, Side::plus), p1 = offdiagonal_image(root, k, Side::plus);
        const Interval minus_hull(f.chart(0) * f.chart(0), f.chart(Rational(1, 3)) * f.chart(Rational(1, 3)));
        require(disjoint(minus_hull, p0) && disjoint(minus_hull, p1), name + ": minus squares meet an image");
        const Interval last = diagonal_cell_image(f, static_cast<unsigned>(k + cut), Side::plus);
        const Interval plus_hull(f.chart(Rational(2, 3)) * f.chart(Rational(2, 3)), last.hi);
        require(disjoint(plus_hull, p0) && disjoint(plus_hull, p1), name + ": kept plus squares meet an image");
      }
      out.right = minus_summand.sum_m_to_infinity(1) + plus_summand.sum_m_to_k_plus(1, cut);
    } else {
      // Plus squares of E_k against P(I,k-1,-): disjoint below k, covered
      // above k, and the corner m = k handled separately.
      const long first_covered = derive_cover_offset(
          name, branch, [&](unsigned k) { return offdiagonal_image(root, k - 1, Side::minus); }, true, kGrid, 8);
      require(first_covered == 1, name + ": covered run does not start right after the corner");
      cut = -1;
      for (unsigned k = 1; k <= kGrid; ++k) {
        const FastNode e = child(root, k, branch);
        const Interval p0 = offdiagonal_image(root, k, Side::minus), p1 = offdiagonal_image(root, k - 1, Side::plus);
        const Interval minus_hull(e.chart(0) * e.chart(0), e.chart(Rational(1, 3)) * e.chart(Rational(1, 3)));
        require(disjoint(minus_hull, p0) && disjoint(minus_hull, p1), name + ": minus squares meet an image");
        if (k >= 2) {
          const Interval last = diagonal_cell_image(e, k - 1, Side::plus);
          const Interval plus_hull(e.chart(Rational(2, 3)) * e.chart(Rational(2, 3)), last.hi);
          require(disjoint(plus_hull, p0) && disjoint(plus_hull, p1), name + ": kept plus squares meet an image");
        }
      }
      out.left = minus_summand.sum_m_to_infinity(1) + plus_summand.sum_m_to_k_plus(1, cut);
    }
  }
  return out;
}

}  // namespace

const BranchBudgets& branch_budgets() {
  static const BranchBudgets budgets = derive_branch_budgets();
  return budgets;
}

Rational right_child_gap_budget(unsigned k) {
  if (k == 0) throw Error("branch budgets are indexed from k = 1");
  const long kk = k;
  return Rational(1, 64) *
         (Rational(20) * inv_pow9(kk + 4) - Rational(91, 5) * inv_pow9(2 * kk + 6) + Rational(1, 10) * inv_pow9(4 * kk + 10));
}

Rational left_child_gap_budget(unsigned k) {
  Rational removed;
  for (unsigned j = 3; j <= 5; ++j) {
    const Rational w = inv_pow9(2 * k + j);
    removed += w * (Rational(10, 9) - w);
  }
  return right_child_gap_budget(k) - removed / 8;
}

Rational corner_gap_budget() {
  const FastNode root = root_node();
  const FastNode e1 = child(root, 1, Side::minus);
  const Interval image = offdiagonal_image(root, 0, Side::minus);
  require(disjoint(diagonal_cell_image(e1, 1, Side::plus), image), "first corner square meets the off-diagonal image");
  const FastNode corner = child(e1, 1, Side::plus);
  return truncated_gap_sum(corner.length(), right_cover_threshold(e1.q, 1));
}

Rational corner_tail_bound() {
  const FastNode root = root_node();
  const Rational len = root.length();
  // |I(E_k, k, +)|^2 = |I|^2 / 81^{k+1}
  const ExpSeries sq = ExpSeries::term(len * len / 81, Rational(1, 81));
  for (unsigned k = 2; k <= kGrid; ++k) {
    const FastNode e = child(root, k, Side::minus);
    const Rational c = child(e, k, Side::plus).length();
    require(sq.eval(k) == c * c, "corner cell length");
    require(classify(diagonal_cell_image(e, k, Side::plus), offdiagonal_image(root, k - 1, Side::minus)) ==
                Cover::partial,
            "corner square is expected to be partially covered for k >= 2");
  }
  return (sq * Rational(5, 36)).sum_k_to_infinity(2);
}

namespace {

RemovedMeasureChain derive_chain() {
  const FastNode root = root_node();
  const Rational len = root.length();
  RemovedMeasureChain out;

  // Level 1: every diagonal gap of the root, the k = 0 gap counted once.
  const ExpSeries gap_sq = ExpSeries::term(len * len / 9, Rational(1, 9));
  for (unsigned k = 0; k <= kGrid; ++k)
    for (Side s : {Side::minus, Side::plus})
      require(diagonal_gap(root, k, s).length() == gap_sq.eval(k), "root gap length");
  out.level1 = gap_sq.eval(0) + 2 * gap_sq.sum_k_to_infinity(1);
  require(out.level1 == gap_measure_limit(len), "root gap total");

  // Level 2: uncovered gaps inside the squares of E_k and F_k.
  const ExpSeries child_sq = ExpSeries::term(len * len / 9, Rational(1, 9));
  auto offset = [&](Side side) {
    return derive_offset(
        "root threshold",
        [&](unsigned k, unsigned) {
          return static_cast<long>(side == Side::minus ? left_cover_threshold(root.q, k)
                                                       : right_cover_threshold(root.q, k));
        },
        [](unsigned k, unsigned) { return static_cast<long>(k); }, 12, 1);
  };
  const ExpSeries level2 =
      truncated_budget(child_sq, offset(Side::minus), false) + truncated_budget(child_sq, offset(Side::plus), false);
  for (unsigned k = 1; k <= kGrid; ++k) {
    Rational direct;
    for (Side s : {Side::minus, Side::plus}) {
      const unsigned n = s == Side::minus ? left_cover_threshold(root.q, k) : right_cover_threshold(root.q, k);
      direct += truncated_gap_sum(child(root, k, s).length(), n);
    }
    require(level2.eval(k) == direct, "level-2 summand");
  }
  out.level2 = out.level1 + level2.sum_k_to_infinity(1);

  // Level 3: branch budgets, the disjoint first corner, and a bound for the
  // partially covered corners.
  const BranchBudgets& b = branch_budgets();
  out.branch_sum = (b.left + b.right).sum_k_to_infinity(1);
  out.level3_lower = out.level2 + corner_gap_budget() + out.branch_sum;
  out.level3_upper = out.level3_lower + corner_tail_bound();
  return out;
}

}  // namespace

const RemovedMeasureChain& removed_measure_chain() {
  static const RemovedMeasureChain chain = derive_chain();
  return chain;
}

}  // namespace cantorprod::gaps
