#pragma once

#include <cstddef>

#include "cantorprod/interval_set.hpp"
#include "cantorprod/kernels.hpp"

namespace cantorprod {

/// Worker count from CANTORPROD_THREADS, falling back to 1.
unsigned default_threads();

struct ProductOptions {
  unsigned threads = 0;  // 0: default_threads()
  kernels::Backend backend = kernels::default_backend();
  std::size_t block_size = std::size_t{1} << 20;  // candidate intervals per merge block
};

struct ProductSummary {
  Rational measure;
  std::size_t component_count = 0;
};

/// P(S x T) = {xy : x in S, y in T} for S, T inside [0, inf).
///
/// Sets whose endpoints share a small common denominator run on the integer
/// sweep kernels; anything else goes through pairwise rational enumeration.
/// The result is canonical, so it does not depend on threads or block size.
IntervalSet product_image(const IntervalSet& s, const IntervalSet& t, const ProductOptions& options = {});

/// Measure and component count of P(S x T) without materializing the set.
ProductSummary product_image_summary(const IntervalSet& s, const IntervalSet& t,
                                     const ProductOptions& options = {});

}  // namespace cantorprod
