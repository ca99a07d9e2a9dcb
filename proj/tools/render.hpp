#pragma once

#include <iosfwd>

namespace cantorprod::cli {

struct RenderOptions {
  unsigned depth = 1;  // fast subdivision depth of the drawn cell grid, <= 2
  unsigned k_max = 3;  // highest family index drawn, <= 6
};

/// SVG picture of the root square: the cell grid, the off-diagonal blocks,
/// and the hyperbola bands xy = const through the endpoints of every family
/// up to k_max. All geometry comes from the exact family endpoints; floating
/// point only appears when coordinates are written out.
void render_svg(std::ostream& os, const RenderOptions& options);

}  // namespace cantorprod::cli
