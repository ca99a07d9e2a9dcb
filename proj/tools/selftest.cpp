#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <string>

#include "cantorprod/certificate.hpp"
#include "cantorprod/product_measure.hpp"

namespace cantorprod::cli {

namespace {

using subdivision::root_node;

bool order_chains() {
  const auto root = root_node();
  if (!gaps::verify_order_chain(root, 8).all_pass()) return false;
  for (const auto& c : subdivision::node_children(root, 4))
    if (!gaps::verify_order_chain(c, 8).all_pass()) return false;
  return true;
}

bool root_thresholds() {
  const Integer q = root_node().q;
  for (unsigned k = 1; k <= 12; ++k)
    if (gaps::left_cover_threshold(q, k) != k || gaps::right_cover_threshold(q, k) != k + 2) return false;
  return true;
}

bool certificates() {
  for (auto t : {certificate::Target::level3, certificate::Target::full})
    if (!certificate::build_certificate(t).valid()) return false;
  return true;
}

// Sorted, separated column intervals with numerators below `limit`.
void random_columns(std::mt19937_64& rng, std::uint64_t limit, std::size_t count, std::vector<std::uint64_t>& lo,
                    std::vector<std::uint64_t>& hi) {
  std::uniform_int_distribution<std::uint64_t> pick(0, limit - 1);
  std::vector<std::uint64_t> pts(2 * count);
  for (auto& p : pts) p = pick(rng);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() % 2) pts.pop_back();
  lo.clear();
  hi.clear();
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    lo.push_back(pts[i]);
    hi.push_back(pts[i + 1]);
  }
}

bool kernel_equivalence() {
  if (!kernels::avx2_available()) return true;
  std::mt19937_64 rng(7);
  std::vector<std::uint64_t> lo, hi;
  std::vector<std::uint32_t> ref, simd;
  for (auto [width, limit] : {std::pair{kernels::Width::narrow, kernels::kNarrowLimit},
                              std::pair{kernels::Width::wide, kernels::kWideLimit}}) {
    for (int trial = 0; trial < 200; ++trial) {
      random_columns(rng, limit, 1 + trial % 37, lo, hi);
      if (lo.empty()) continue;
      std::uniform_int_distribution<std::uint64_t> pick(1, limit - 1);
      std::uint64_t a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      ref.clear();
      simd.clear();
      kernels::scalar::row_breaks(a, b, lo, hi, ref);
      kernels::row_breaks(kernels::Backend::avx2, width, a, b, lo, hi, simd);
      if (ref != simd) return false;
    }
  }
  return true;
}

bool product_oracle() {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Interval> raw;
    std::uniform_int_distribution<long> pick(60, 100);
    for (int i = 0; i < 6; ++i) {
      long a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      raw.emplace_back(Rational(a, 100), Rational(b, 100));
    }
    const IntervalSet s = IntervalSet::normalize(raw);
    std::vector<Interval> pairs;
    for (const auto& x : s)
      for (const auto& y : s) pairs.emplace_back(x.lo * y.lo, x.hi * y.hi);
    if (product_image(s, s) != IntervalSet::normalize(pairs)) return false;
  }
  return true;
}

bool membership() {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    // x = 0.d1..dp repeating with digits in {0, 2}: x = D / (3^p - 1)
    const unsigned p = 1 + trial % 9;
    Integer d = 0;
    for (unsigned i = 0; i < p; ++i) d = 3 * d + 2 * static_cast<long>(rng() % 2);
    const Rational x(d, pow3(p) - 1);
    if (subdivision::cantor_membership(x).verdict != subdivision::Membership::member) return false;
  }
  const auto gaps = subdivision::gap_set(8);
  for (const auto& g : gaps) {
    const Rational mid = (g.lo + g.hi) / 2;
    if (subdivision::cantor_membership(mid).verdict != subdivision::Membership::non_member) return false;
  }
  return true;
}

bool small_estimates() {
  if (product::art_estimate(0).set_measure != Rational(5, 9)) return false;
  if (product::art_estimate(1).set_measure != Rational(44, 81)) return false;
  const auto& mu = gaps::removed_measure_chain();
  const auto b = product::fast_estimate(2, 8);
  const Rational exact = Rational(5, 9) - mu.level2;
  return b.lower <= exact && exact <= b.upper;
}

}  // namespace

bool run_selftest(std::ostream& os) {
  const std::vector<std::pair<std::string, std::function<bool()>>> checks{
      {"order chain at the root and its children", order_chains},
      {"root cover thresholds", root_thresholds},
      {"certificates", certificates},
      {std::string("kernel equivalence (") + kernels::backend_name(kernels::default_backend()) + ")",
       kernel_equivalence},
      {"product image against pairwise oracle", product_oracle},
      {"membership oracle", membership},
      {"small estimates", small_estimates},
  };
  bool all = true;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      os << "error in " << name << ": " << e.what() << '\n';
    }
    os << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace cantorprod::cli
