#pragma once

#include <span>
#include <vector>

#include "cantorprod/rational.hpp"

namespace cantorprod {

/// Closed interval [lo, hi]; degenerate points are allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const Interval& other) const { return !(hi < other.lo || other.hi < lo); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals, held as a strictly sorted sequence of
/// disjoint, non-touching components.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Sorts and merges overlapping or touching intervals.
  static IntervalSet normalize(std::vector<Interval> raw);

  /// Adopts intervals that are already strictly sorted and disjoint.
  /// Throws Error if that invariant does not hold.
  static IntervalSet from_sorted(std::vector<Interval> sorted);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }

  bool contains(const Rational& x) const;
  /// True iff every point of `other` lies in this set.
  bool contains(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> v) : intervals_(std::move(v)) {}
  std::vector<Interval> intervals_;
};

inline IntervalSet normalize(std::vector<Interval> raw) { return IntervalSet::normalize(std::move(raw)); }

/// Total length of the components.
Rational measure(const IntervalSet& s);

/// Image of S under x -> I.lo + |I| x. Requires I nondegenerate.
IntervalSet affine_image(const IntervalSet& s, const Interval& target);
Rational affine_image(const Rational& x, const Interval& target);

/// Closure of S \ T. Isolated points left behind are dropped.
IntervalSet set_difference(const IntervalSet& s, const IntervalSet& t);

IntervalSet set_union(const IntervalSet& s, const IntervalSet& t);

/// [a, a+t] u [a+2t, a+3t] for I = [a, a+3t].
IntervalSet remove_middle_third(const Interval& interval);

}  // namespace cantorprod
