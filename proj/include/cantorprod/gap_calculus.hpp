#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cantorprod/series.hpp"
#include "cantorprod/subdivision.hpp"

namespace cantorprod::gaps {

using subdivision::FastNode;
using subdivision::Side;

/// An exact identity or inequality that a derived constant depends on did
/// not hold.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// Product images attached to a cell I with chart A(x) = |I|(q + x). Every
// function here is exact and rational.

/// Image of an off-diagonal block:
///   minus: P(I(2/3^{k+1}, 1/3^k) x I(0, 1/3^{k+1}))
///   plus:  P(I(1 - 1/3^{k+1}, 1) x I(1 - 1/3^k, 1 - 2/3^{k+1}))
/// where I(x, y) = [A(x), A(y)]. At k = 0 both sides coincide.
Interval offdiagonal_image(const FastNode& node, unsigned k, Side side);

/// Square of the child cell at index k >= 1: [lo^2, hi^2].
Interval diagonal_cell_image(const FastNode& node, unsigned k, Side side);

/// Closure of the gap of P(J x J) between the two squares of the end pieces
/// of J = I(0, 1/3^k) (minus) or I(1 - 1/3^k, 1) (plus).
Interval diagonal_gap(const FastNode& node, unsigned k, Side side);

enum class Family { offdiagonal, diagonal_cell, diagonal_gap };

const char* family_name(Family f);

struct FamilyKind {
  Family family = Family::offdiagonal;
  unsigned k = 0;
  Side side = Side::minus;

  /// Index 0 off-diagonal images and gaps coincide on both sides; they are
  /// tagged minus so that sums count them once.
  FamilyKind canonical() const;

  friend bool operator==(const FamilyKind&, const FamilyKind&) = default;
};

Interval family_interval(const FastNode& node, const FamilyKind& kind);

/// Sign of A(x)A(y) - A(z)A(t), via sign(q(x + y - z - t) + xy - zt).
std::strong_ordering compare_products(const FastNode& node, const Rational& x, const Rational& y,
                                      const Rational& z, const Rational& t);

struct ChainCheck {
  std::string relation;  // human-readable inequality
  unsigned k = 0;
  bool holds = false;       // the inequality is true
  bool consistent = false;  // the endpoint comparison agrees with compare_products
};

struct ChainReport {
  std::vector<ChainCheck> checks;
  bool all_pass() const;
};

/// Interleaving of gaps, cell squares and off-diagonal images at both ends of
/// a cell for every index up to k_max.
ChainReport verify_order_chain(const FastNode& node, unsigned k_max);

/// Smallest l >= 0 with 3^{l+2} > 2 3^k q + 2: from this depth on, the
/// diagonal gaps of the index-k minus child are covered.
unsigned left_cover_threshold(const Integer& q, unsigned k);

/// Smallest l >= 0 with 3^{l+1} > 2 3^{k+1} (q + 1) - 4, for the plus child.
unsigned right_cover_threshold(const Integer& q, unsigned k);

/// (|J|^2 / 8)(10/9 - 9^{-N}): the first N diagonal gap lengths of P(J x J).
Rational truncated_gap_sum(const Rational& length, unsigned depth);

/// (5/36)|J|^2, the limit of truncated_gap_sum as N grows.
Rational gap_measure_limit(const Rational& length);

/// Uncovered diagonal gap measure of one cell, found geometrically: the plus
/// gaps G(cell, l, +) for l <= scan are tested for containment in `covering`
/// and must split into an uncovered run followed by a covered run; all minus
/// gaps count as uncovered.
struct GapBudget {
  unsigned depth = 0;                // first covered plus index (the N of truncated_gap_sum)
  std::vector<bool> plus_covered;    // l = 0..scan
  Rational total;                    // uncovered measure
};

GapBudget gap_budget(const FastNode& cell, const Interval& covering, unsigned scan);

/// Budget of uncovered gap measure inside the square of the index-k child on
/// one side of the root. These are derived symbolically from the thresholds
/// and covering pattern, then checked against node-by-node evaluation.
struct BranchBudgets {
  ExpSeries right;  // plus child F_k, per k >= 1
  ExpSeries left;   // minus child E_k, per k >= 1, excluding its corner term
};

const BranchBudgets& branch_budgets();

/// Closed forms of the budgets, written out directly.
Rational right_child_gap_budget(unsigned k);
Rational left_child_gap_budget(unsigned k);

/// Truncated gap sum of the corner cell I(E_1, 1, +), whose square touches
/// the off-diagonal image only for k >= 2.
Rational corner_gap_budget();

/// Upper bound for the corner cells I(E_k, k, +), k >= 2.
Rational corner_tail_bound();

/// Removed diagonal measure of the first three fast levels; level 3 is known
/// only within [level3_lower, level3_upper].
struct RemovedMeasureChain {
  Rational level1;
  Rational level2;
  Rational level3_lower;
  Rational level3_upper;
  Rational branch_sum;  // sum over k >= 1 of both branch budgets
};

const RemovedMeasureChain& removed_measure_chain();

}  // namespace cantorprod::gaps
