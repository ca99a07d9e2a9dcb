#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cantorprod/gap_calculus.hpp"

namespace cantorprod::cli {

namespace {

using gaps::Family;
using gaps::FamilyKind;
using subdivision::Side;

constexpr double kSize = 760;
constexpr double kMargin = 60;
constexpr int kSamples = 160;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Canvas {
 public:
  Canvas(std::ostream& os, const Interval& square)
      : os_(os), lo_(square.lo.to_double()), hi_(square.hi.to_double()) {}

  double px(double x) const { return kMargin + (x - lo_) / (hi_ - lo_) * kSize; }
  double py(double y) const { return kMargin + kSize - (y - lo_) / (hi_ - lo_) * kSize; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  void rect(const Interval& x, const Interval& y, const char* fill, const char* extra = "") {
    const double x0 = px(x.lo.to_double()), x1 = px(x.hi.to_double());
    const double y0 = py(y.hi.to_double()), y1 = py(y.lo.to_double());
    os_ << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0) << "\" height=\""
        << num(y1 - y0) << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  }

  // Region of the square between the hyperbolas xy = c1 and xy = c2.
  void band(double c1, double c2, const char* fill, const char* stroke) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= kSamples; ++i) {
      const double x = lo_ + (hi_ - lo_) * i / kSamples;
      pts.emplace_back(x, std::clamp(c1 / x, lo_, hi_));
    }
    for (int i = kSamples; i >= 0; --i) {
      const double x = lo_ + (hi_ - lo_) * i / kSamples;
      pts.emplace_back(x, std::clamp(c2 / x, lo_, hi_));
    }
    os_ << "<polygon fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"0.4\" points=\"";
    for (const auto& [x, y] : pts) os_ << num(px(x)) << ',' << num(py(y)) << ' ';
    os_ << "\"/>\n";
  }

  void hyperbola(double c, const char* stroke) {
    os_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.6\" points=\"";
    for (int i = 0; i <= kSamples; ++i) {
      const double x = lo_ + (hi_ - lo_) * i / kSamples;
      const double y = c / x;
      if (y < lo_ || y > hi_) continue;
      os_ << num(px(x)) << ',' << num(py(y)) << ' ';
    }
    os_ << "\"/>\n";
  }

  void label(double x, double y, const std::string& text, double size) {
    os_ << "<text x=\"" << num(px(x)) << "\" y=\"" << num(py(y)) << "\" font-size=\"" << num(size)
        << "\" font-family=\"sans-serif\">" << text << "</text>\n";
  }

 private:
  std::ostream& os_;
  double lo_, hi_;
};

std::string family_label(const FamilyKind& f) {
  const char* tag = f.family == Family::offdiagonal ? "P" : (f.family == Family::diagonal_cell ? "Q" : "G");
  return std::string(tag) + "(" + std::to_string(f.k) + "," + (f.side == Side::minus ? "-" : "+") + ")";
}

std::vector<FamilyKind> families(unsigned k_max) {
  std::vector<FamilyKind> out;
  for (unsigned k = 0; k <= k_max; ++k)
    for (Side s : {Side::minus, Side::plus})
      for (Family f : {Family::offdiagonal, Family::diagonal_cell, Family::diagonal_gap}) {
        if (f == Family::diagonal_cell && k == 0) continue;
        const FamilyKind kind = FamilyKind{f, k, s}.canonical();
        if (std::find(out.begin(), out.end(), kind) == out.end()) out.push_back(kind);
      }
  return out;
}

}  // namespace

void render_svg(std::ostream& os, const RenderOptions& options) {
  if (options.depth > 2) throw Error("render depth must be <= 2");
  if (options.k_max > 6) throw Error("render k_max must be <= 6");
  const auto root = subdivision::root_node();
  const Interval square = root.interval();
  const double total = kSize + 2 * kMargin;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total) << "\" height=\"" << num(total)
     << "\" viewBox=\"0 0 " << num(total) << ' ' << num(total) << "\">\n";
  os << "<!-- decimal coordinates are for display only -->\n";
  Canvas canvas(os, square);
  canvas.rect(square, square, "#ffffff", " stroke=\"#000000\" stroke-width=\"1\"");

  const auto kinds = families(options.k_max);
  os << "<g id=\"offdiagonal-bands\">\n";
  for (const auto& f : kinds)
    if (f.family == Family::offdiagonal) {
      const Interval iv = gaps::family_interval(root, f);
      canvas.band(iv.lo.to_double(), iv.hi.to_double(), "#d9d9d9", "none");
    }
  os << "</g>\n<g id=\"offdiagonal-blocks\">\n";
  for (unsigned k = 0; k <= options.k_max; ++k) {
    const Rational a = inv_pow3(k), b = inv_pow3(k + 1);
    const Interval minus_x = root.sub(2 * b, a), minus_y = root.sub(0, b);
    const Interval plus_x = root.sub(1 - b, 1), plus_y = root.sub(1 - a, 1 - 2 * b);
    for (const auto& [x, y] : {std::pair{minus_x, minus_y}, std::pair{plus_x, plus_y}}) {
      canvas.rect(x, y, "#8c8c8c");
      canvas.rect(y, x, "#8c8c8c");
    }
  }
  os << "</g>\n<g id=\"cells\">\n";
  std::vector<Interval> cells{square};
  if (options.depth > 0 && options.k_max > 0) {
    cells.clear();
    const auto sub = subdivision::fast_subdivision(options.depth, subdivision::TruncationPolicy(options.k_max));
    for (const auto& n : sub.nodes) cells.push_back(n.interval());
  }
  for (const auto& x : cells)
    for (const auto& y : cells) canvas.rect(x, y, "#000000");
  os << "</g>\n<g id=\"gap-bands\">\n";
  for (const auto& f : kinds)
    if (f.family == Family::diagonal_gap) {
      const Interval iv = gaps::family_interval(root, f);
      canvas.band(iv.lo.to_double(), iv.hi.to_double(), "#ffffff", "#1f5fbf");
    }
  os << "</g>\n<g id=\"hyperbolas\">\n";
  for (const auto& f : kinds) {
    const Interval iv = gaps::family_interval(root, f);
    const char* stroke = f.family == Family::offdiagonal ? "#b02020" : (f.family == Family::diagonal_cell ? "#208040" : "#1f5fbf");
    canvas.hyperbola(iv.lo.to_double(), stroke);
    canvas.hyperbola(iv.hi.to_double(), stroke);
  }
  os << "</g>\n<g id=\"labels\">\n";
  for (const auto& f : kinds) {
    if (f.k > 3) continue;
    const Interval iv = gaps::family_interval(root, f);
    const double mid = std::sqrt((iv.lo.to_double() + iv.hi.to_double()) / 2);
    // P labels sit off the diagonal so they do not collide with Q and G.
    const double shift = f.family == Family::offdiagonal ? 0.012 : (f.family == Family::diagonal_cell ? -0.006 : 0.004);
    canvas.label(mid + shift, mid - shift, family_label(f), 14.0 - 2.5 * f.k);
  }
  os << "</g>\n</svg>\n";
}

}  // namespace cantorprod::cli
