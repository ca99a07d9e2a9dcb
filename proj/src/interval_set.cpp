#include "cantorprod/interval_set.hpp"

#include <algorithm>

namespace cantorprod {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw Error("interval with lo > hi: [" + lo.to_string() + ", " + hi.to_string() + "]");
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw)
    if (iv.hi < iv.lo) throw Error("interval with lo > hi");
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (auto& iv : raw) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::from_sorted(std::vector<Interval> sorted) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].hi < sorted[i].lo) throw Error("interval with lo > hi");
    if (i > 0 && !(sorted[i - 1].hi < sorted[i].lo)) throw Error("intervals not strictly sorted");
  }
  return IntervalSet(std::move(sorted));
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  return x <= std::prev(it)->hi;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  // Components are closed and non-touching, so each component of `other`
  // must fit inside a single component of this set.
  std::size_t j = 0;
  for (const auto& iv : other) {
    while (j < intervals_.size() && intervals_[j].hi < iv.lo) ++j;
    if (j == intervals_.size() || !intervals_[j].contains(iv)) return false;
  }
  return true;
}

Rational measure(const IntervalSet& s) {
  Rational total;
  for (const auto& iv : s) total += iv.length();
  return total;
}

Rational affine_image(const Rational& x, const Interval& target) {
  return target.lo + target.length() * x;
}

IntervalSet affine_image(const IntervalSet& s, const Interval& target) {
  if (!(target.lo < target.hi)) throw Error("affine_image: degenerate target interval");
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& iv : s) out.emplace_back(affine_image(iv.lo, target), affine_image(iv.hi, target));
  return IntervalSet::from_sorted(std::move(out));
}

IntervalSet set_difference(const IntervalSet& s, const IntervalSet& t) {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : s) {
    if (iv.lo == iv.hi) {
      if (!t.contains(iv.lo)) out.push_back(iv);
      continue;
    }
    while (j < t.size() && t[j].hi <= iv.lo) ++j;
    Rational cursor = iv.lo;
    for (std::size_t k = j; k < t.size() && t[k].lo < iv.hi && cursor < iv.hi; ++k) {
      if (cursor < t[k].lo) out.emplace_back(cursor, t[k].lo);
      if (cursor < t[k].hi) cursor = t[k].hi;
    }
    if (cursor < iv.hi) out.emplace_back(cursor, iv.hi);
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet set_union(const IntervalSet& s, const IntervalSet& t) {
  std::vector<Interval> all(s.begin(), s.end());
  all.insert(all.end(), t.begin(), t.end());
  return IntervalSet::normalize(std::move(all));
}

IntervalSet remove_middle_third(const Interval& interval) {
  const Rational t = interval.length() / Rational(3);
  return IntervalSet::normalize({Interval(interval.lo, interval.lo + t), Interval(interval.lo + t + t, interval.hi)});
}

}  // namespace cantorprod
