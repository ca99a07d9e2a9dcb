#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cantorprod/gap_calculus.hpp"

namespace cantorprod::certificate {

using gaps::CertificationError;

/// level3: the measure of P(D_3 x D_3). full: the measure of P(K x K).
enum class Target { level3, full };

/// External names: "prop3" and "theorem".
const char* target_name(Target t);
Target parse_target(std::string_view name);

struct ChainEntry {
  std::string name;
  Rational value;    // re-derived in exact arithmetic
  Rational literal;  // published constant it is compared against
  bool match = false;
};

struct Certificate {
  Target target = Target::level3;
  Rational center;
  Rational radius;
  std::vector<ChainEntry> chain;
  std::string decimal_center;

  bool valid() const;
  Interval enclosure() const { return Interval(center - radius, center + radius); }
};

using LiteralTable = std::map<std::string, Rational>;

/// Published constants, keyed by chain entry name.
const LiteralTable& reference_literals();

/// Derives every chain entry and compares it with `literals`. Never throws on
/// a mismatch; the entry is flagged instead.
Certificate build_certificate(Target target, const LiteralTable& literals = reference_literals(),
                              unsigned digits = 15);

/// build_certificate, then throws CertificationError naming the first entry
/// that does not match.
Certificate certify(Target target, const LiteralTable& literals = reference_literals(), unsigned digits = 15);

}  // namespace cantorprod::certificate
