#pragma once
// Branch budgets assembled cell by cell from the family images, for
// comparison with the closed forms.

#include "cantorprod/gap_calculus.hpp"

namespace oracle {

using namespace cantorprod;
using namespace cantorprod::gaps;

// Budget of the index-k child on one side of the root, from its own
// grandchildren: each grandchild square contributes a truncated gap sum whose
// depth is the grandchild's cover threshold, and plus-side squares are skipped
// once they meet `covering`. Minus grandchildren are summed to m = 40 and the
// rest added as a geometric tail with the threshold pattern of m = 40.
inline Rational branch_budget(Side branch, unsigned k, const Interval& covering, unsigned plus_limit) {
  const FastNode c = subdivision::child(subdivision::root_node(), k, branch);
  constexpr unsigned kListed = 40;
  Rational s;
  for (unsigned m = 1; m <= kListed; ++m) {
    const FastNode g = subdivision::child(c, m, Side::minus);
    s += truncated_gap_sum(g.length(), left_cover_threshold(c.q, m));
  }
  // Tail: lengths |c|^2 / 9^{m+1}, threshold t(m) = t(kListed) + (m - kListed).
  const unsigned t0 = left_cover_threshold(c.q, kListed);
  const Rational len2 = c.length() * c.length();
  const Rational r1 = Rational(1, 9), r2 = Rational(1, 81);
  const Rational first = len2 * inv_pow9(kListed + 2);
  s += Rational(10, 72) * first / (1 - r1) - first * inv_pow9(t0 + 1) / 8 / (1 - r2);
  for (unsigned m = 1; m <= plus_limit; ++m) {
    const Interval sq = diagonal_cell_image(c, m, Side::plus);
    if (sq.intersects(covering)) break;
    s += truncated_gap_sum(subdivision::child(c, m, Side::plus).length(), right_cover_threshold(c.q, m));
  }
  return s;
}

}  // namespace oracle
