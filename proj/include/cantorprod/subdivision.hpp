#pragma once

#include <string>
#include <vector>

#include "cantorprod/interval_set.hpp"

namespace cantorprod::subdivision {

/// [m/3^k, (m+1)/3^k].
struct TriadicInterval {
  Integer m;
  unsigned long k = 0;

  Interval to_interval() const;
  Rational lo() const { return Rational(m, pow3(k)); }
  Rational length() const { return inv_pow3(k); }

  friend bool operator==(const TriadicInterval&, const TriadicInterval&) = default;
};

/// A cell of the fast subdivision at the given depth. `q` is the integer
/// ratio lo/|cell|; the affine chart of the cell is x -> |cell| (q + x).
struct FastNode {
  TriadicInterval cell;
  Integer q;
  unsigned depth = 0;

  Interval interval() const { return cell.to_interval(); }
  Rational length() const { return cell.length(); }
  /// Affine chart from [0,1] onto the cell; defined for every rational x.
  Rational chart(const Rational& x) const { return length() * (Rational(q) + x); }
  /// Sub-interval [chart(x), chart(y)].
  Interval sub(const Rational& x, const Rational& y) const { return Interval(chart(x), chart(y)); }

  friend bool operator==(const FastNode&, const FastNode&) = default;
};

/// Which end of a cell a child or family hangs from: the one accumulating at
/// the left endpoint, or the one accumulating at the right endpoint.
enum class Side { minus, plus };

const char* side_name(Side s);

/// [2/3, 1] at depth 0, q = 2.
FastNode root_node();

/// What to do with the two unresolved end pieces [0, 1/3^{K+1}] and
/// [1 - 1/3^{K+1}, 1] of every cell.
enum class TailHandling { outer, inner };

struct TruncationPolicy {
  unsigned gap_depth = 1;  // keep gaps of index <= gap_depth
  TailHandling tails = TailHandling::outer;

  TruncationPolicy() = default;
  TruncationPolicy(unsigned gap_depth_, TailHandling tails_ = TailHandling::outer);
};

inline constexpr unsigned kStandardLimit = 16;

/// K_n: 2^n intervals of length 3^-n.
IntervalSet standard_subdivision(unsigned n, unsigned limit = kStandardLimit);

/// Right half of the standard subdivision after n steps inside [2/3, 1]:
/// K_{n+1} intersected with [2/3, 1], so R_0 = [2/3, 1] and R_n has 2^n
/// intervals of length 3^-(n+1). This is the indexing under which
/// 0 <= L(P(R_n x R_n)) - L(P(R x R)) <= (1/63)(2/9)^n holds.
IntervalSet right_half_subdivision(unsigned n, unsigned limit = kStandardLimit);

/// The gaps of index <= K of the self-similar gap set: the middle third plus
/// K gaps accumulating at each end of [0, 1].
IntervalSet gap_set(unsigned gap_depth);

/// Cell of the subdivision of `node` at index k >= 1 on the given side.
FastNode child(const FastNode& node, unsigned k, Side side);

/// All 2K children of `node`, in left-to-right order.
std::vector<FastNode> node_children(const FastNode& node, unsigned gap_depth);

/// The two end pieces of `node` left unresolved at gap depth K.
std::pair<Interval, Interval> node_tails(const FastNode& node, unsigned gap_depth);

struct FastSubdivision {
  IntervalSet inner;               // subset of the true level-n set
  IntervalSet outer;               // superset of the true level-n set
  std::vector<FastNode> nodes;     // retained depth-n cells, left to right
};

FastSubdivision fast_subdivision(unsigned n, const TruncationPolicy& policy);

/// Depth-n cells only, without building the interval sets.
std::vector<FastNode> fast_nodes(unsigned n, unsigned gap_depth);

struct SquaredLengthSum {
  Rational truncated;    // sum of |I|^2 over the retained depth-n cells
  Rational exact_limit;  // (1/9)(1/36)^n
};

SquaredLengthSum squared_length_sum(unsigned n, const TruncationPolicy& policy);

enum class Membership { member, non_member, undetermined };

const char* membership_name(Membership m);

struct MembershipResult {
  Membership verdict = Membership::undetermined;
  std::string preperiod;  // ternary digits before the repeating block
  std::string period;     // repeating block; empty if it did not close
  std::size_t digits_examined = 0;
};

/// Membership in the middle-third Cantor set via the eventually periodic
/// ternary expansion of x. Points with two expansions are members when
/// either expansion avoids the digit 1.
MembershipResult cantor_membership(const Rational& x, std::size_t max_digits = 1'000'000);

}  // namespace cantorprod::subdivision
