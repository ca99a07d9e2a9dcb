#include "cantorprod/product_image.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>

namespace cantorprod {

namespace {

using u128 = unsigned __int128;

struct Grid {
  Integer den;
  std::vector<std::uint64_t> lo;
  std::vector<std::uint64_t> hi;
  std::uint64_t max_num = 0;
};

bool to_u64_below(const Integer& v, std::uint64_t limit, std::uint64_t& out) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return false;
  out = mpz_get_ui(v.get_mpz_t());
  return out < limit;
}

std::optional<Grid> to_grid(const IntervalSet& s) {
  Grid g;
  g.den = 1;
  for (const auto& iv : s) {
    mpz_lcm(g.den.get_mpz_t(), g.den.get_mpz_t(), iv.lo.raw().get_den_mpz_t());
    mpz_lcm(g.den.get_mpz_t(), g.den.get_mpz_t(), iv.hi.raw().get_den_mpz_t());
    std::uint64_t probe = 0;
    if (!to_u64_below(g.den, kernels::kWideLimit, probe)) return std::nullopt;
  }
  g.lo.reserve(s.size());
  g.hi.reserve(s.size());
  for (const auto& iv : s) {
    std::uint64_t lo = 0, hi = 0;
    if (!to_u64_below(iv.lo.numerator() * (g.den / iv.lo.denominator()), kernels::kWideLimit, lo)) return std::nullopt;
    if (!to_u64_below(iv.hi.numerator() * (g.den / iv.hi.denominator()), kernels::kWideLimit, hi)) return std::nullopt;
    g.lo.push_back(lo);
    g.hi.push_back(hi);
    g.max_num = std::max(g.max_num, hi);
  }
  return g;
}

struct Segment {
  u128 lo;
  u128 hi;
};

// Sorted, disjoint, non-touching.
using SegmentUnion = std::vector<Segment>;

void append_merged(SegmentUnion& out, const Segment& seg) {
  if (!out.empty() && seg.lo <= out.back().hi) {
    if (out.back().hi < seg.hi) out.back().hi = seg.hi;
  } else {
    out.push_back(seg);
  }
}

SegmentUnion merge_unions(const SegmentUnion& a, const SegmentUnion& b) {
  SegmentUnion out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].lo <= b[j].lo))
      append_merged(out, a[i++]);
    else
      append_merged(out, b[j++]);
  }
  return out;
}

void flush(SegmentUnion& acc, std::vector<Segment>& block) {
  if (block.empty()) return;
  std::sort(block.begin(), block.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  SegmentUnion merged;
  merged.reserve(block.size());
  for (const auto& seg : block) append_merged(merged, seg);
  block.clear();
  acc = acc.empty() ? std::move(merged) : merge_unions(acc, merged);
}

SegmentUnion grid_product(const Grid& a, const Grid& b, bool symmetric, const ProductOptions& options) {
  const kernels::Width width =
      (a.max_num < kernels::kNarrowLimit && b.max_num < kernels::kNarrowLimit) ? kernels::Width::narrow
                                                                             : kernels::Width::wide;
  const std::size_t rows = a.lo.size();
  const std::size_t block_size = std::max<std::size_t>(options.block_size, 1);
  const unsigned threads = std::max(1u, options.threads == 0 ? default_threads() : options.threads);
  constexpr std::size_t kRowsPerChunk = 16;
  const std::size_t chunks = (rows + kRowsPerChunk - 1) / kRowsPerChunk;

  std::atomic<std::size_t> next_chunk{0};
  std::vector<SegmentUnion> partial(threads);

  auto worker = [&](unsigned id) {
    SegmentUnion& acc = partial[id];
    std::vector<Segment> block;
    std::vector<std::uint32_t> breaks;
    std::span<const std::uint64_t> blo(b.lo), bhi(b.hi);
    for (std::size_t c = next_chunk++; c < chunks; c = next_chunk++) {
      const std::size_t r_end = std::min(rows, (c + 1) * kRowsPerChunk);
      for (std::size_t r = c * kRowsPerChunk; r < r_end; ++r) {
        const std::size_t first = symmetric ? r : 0;
        if (first >= blo.size()) continue;
        const auto col_lo = blo.subspan(first);
        const auto col_hi = bhi.subspan(first);
        breaks.clear();
        kernels::row_breaks(options.backend, width, a.lo[r], a.hi[r], col_lo, col_hi, breaks);
        std::size_t start = 0;
        auto emit = [&](std::size_t end) {
          block.push_back({u128(a.lo[r]) * col_lo[start], u128(a.hi[r]) * col_hi[end]});
          start = end + 1;
        };
        for (std::uint32_t j : breaks) emit(j);
        emit(col_lo.size() - 1);
        if (block.size() >= block_size) flush(acc, block);
      }
    }
    flush(acc, block);
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  SegmentUnion result;
  for (auto& p : partial) result = result.empty() ? std::move(p) : merge_unions(result, p);
  return result;
}

Integer to_integer(u128 v) {
  Integer hi(static_cast<unsigned long>(v >> 64));
  Integer lo(static_cast<unsigned long>(v & ~std::uint64_t{0}));
  return (hi << 64) + lo;
}

void check_nonnegative(const IntervalSet& s) {
  if (!s.empty() && s[0].lo.sign() < 0) throw Error("product_image: negative endpoint");
}

struct GridResult {
  SegmentUnion segments;
  Integer den;
};

std::optional<GridResult> try_grid(const IntervalSet& s, const IntervalSet& t, const ProductOptions& options) {
  auto gs = to_grid(s);
  if (!gs) return std::nullopt;
  const bool symmetric = (&s == &t) || s == t;
  if (symmetric) return GridResult{grid_product(*gs, *gs, true, options), gs->den * gs->den};
  auto gt = to_grid(t);
  if (!gt) return std::nullopt;
  return GridResult{grid_product(*gs, *gt, false, options), gs->den * gt->den};
}

IntervalSet rational_product(const IntervalSet& s, const IntervalSet& t) {
  std::vector<Interval> raw;
  raw.reserve(s.size() * t.size());
  for (const auto& x : s)
    for (const auto& y : t) raw.emplace_back(x.lo * y.lo, x.hi * y.hi);
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("CANTORPROD_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

IntervalSet product_image(const IntervalSet& s, const IntervalSet& t, const ProductOptions& options) {
  check_nonnegative(s);
  check_nonnegative(t);
  if (s.empty() || t.empty()) return {};
  if (auto g = try_grid(s, t, options)) {
    std::vector<Interval> out;
    out.reserve(g->segments.size());
    for (const auto& seg : g->segments)
      out.emplace_back(Rational(to_integer(seg.lo), g->den), Rational(to_integer(seg.hi), g->den));
    return IntervalSet::from_sorted(std::move(out));
  }
  return rational_product(s, t);
}

ProductSummary product_image_summary(const IntervalSet& s, const IntervalSet& t, const ProductOptions& options) {
  check_nonnegative(s);
  check_nonnegative(t);
  if (s.empty() || t.empty()) return {};
  if (auto g = try_grid(s, t, options)) {
    u128 total = 0;
    for (const auto& seg : g->segments) total += seg.hi - seg.lo;
    return {Rational(to_integer(total), g->den), g->segments.size()};
  }
  const IntervalSet image = rational_product(s, t);
  return {measure(image), image.size()};
}

}  // namespace cantorprod
