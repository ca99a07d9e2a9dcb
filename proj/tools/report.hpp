#pragma once

#include <iosfwd>

#include <json.hpp>

#include "cantorprod/certificate.hpp"
#include "cantorprod/product_measure.hpp"

namespace cantorprod::cli {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Interval& iv);
json to_json(const IntervalSet& s);
json to_json(const subdivision::FastNode& node);

/// Reports carry their timing in "elapsed_ms"; everything else is a pure
/// function of the inputs.
json estimate_report(const product::EstimateResult& r, unsigned digits);
json bracket_report(const product::FastBracket& b, unsigned digits);
json certificate_report(const certificate::Certificate& c);
json membership_report(const Rational& x, const subdivision::MembershipResult& m);

/// Drops the timing field so two reports can be compared byte for byte.
json without_timing(json report);

/// Plain "key: value" rendering of a report.
void write_text(std::ostream& os, const json& report);

}  // namespace cantorprod::cli
