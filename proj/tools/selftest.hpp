#pragma once

#include <iosfwd>

namespace cantorprod::cli {

/// Runs a quick pass over the invariants of every module, one line per
/// check. Returns true when all of them hold.
bool run_selftest(std::ostream& os);

}  // namespace cantorprod::cli
