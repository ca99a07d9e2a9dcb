#include "report.hpp"

#include <ostream>

namespace cantorprod::cli {

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Interval& iv) { return json::array({iv.lo.to_string(), iv.hi.to_string()}); }

json to_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& iv : s) out.push_back(to_json(iv));
  return out;
}

json to_json(const subdivision::FastNode& node) {
  return {{"m", node.cell.m.get_str()}, {"k", node.cell.k}, {"q", node.q.get_str()}, {"depth", node.depth}};
}

json estimate_report(const product::EstimateResult& r, unsigned digits) {
  return {{"n", r.n},
          {"set_measure", to_json(r.set_measure)},
          {"tail_bound", to_json(r.tail_bound)},
          {"full_value", to_json(r.full_value)},
          {"decimal", r.full_value.to_decimal(digits)},
          {"component_count", r.component_count},
          {"elapsed_ms", r.elapsed.count()}};
}

json bracket_report(const product::FastBracket& b, unsigned digits) {
  return {{"n", b.n},
          {"K", b.gap_depth},
          {"lower", to_json(b.lower)},
          {"upper", to_json(b.upper)},
          {"width", to_json(b.width())},
          {"decimal_lower", b.lower.to_decimal(digits)},
          {"decimal_upper", b.upper.to_decimal(digits)},
          {"inner_components", b.inner_components},
          {"outer_components", b.outer_components},
          {"inner_product_components", b.inner_product_components},
          {"outer_product_components", b.outer_product_components},
          {"elapsed_ms", b.elapsed.count()}};
}

json certificate_report(const certificate::Certificate& c) {
  json chain = json::array();
  for (const auto& e : c.chain)
    chain.push_back({{"name", e.name},
                     {"value", to_json(e.value)},
                     {"paper_literal", to_json(e.literal)},
                     {"match", e.match}});
  return {{"target", certificate::target_name(c.target)},
          {"center", to_json(c.center)},
          {"radius", to_json(c.radius)},
          {"decimal_center", c.decimal_center},
          {"chain", std::move(chain)}};
}

json membership_report(const Rational& x, const subdivision::MembershipResult& m) {
  return {{"x", to_json(x)},
          {"verdict", subdivision::membership_name(m.verdict)},
          {"preperiod", m.preperiod},
          {"period", m.period},
          {"digits_examined", m.digits_examined}};
}

json without_timing(json report) {
  if (report.is_object()) report.erase("elapsed_ms");
  return report;
}

namespace {

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_value(std::ostream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, item] : v.items()) write_value(os, k, item, indent + 1);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    for (const auto& item : v) {
      os << pad << "  -\n";
      for (const auto& [k, field] : item.items()) write_value(os, k, field, indent + 2);
    }
  } else if (v.is_array()) {
    os << pad << key << ":";
    for (const auto& item : v) os << ' ' << (item.is_array() ? item.dump() : scalar_text(item));
    os << '\n';
  } else {
    os << pad << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

void write_text(std::ostream& os, const json& report) {
  for (const auto& [k, v] : report.items()) write_value(os, k, v, 0);
}

}  // namespace cantorprod::cli
