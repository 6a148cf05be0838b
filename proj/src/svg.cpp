#include "confspace/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace confspace {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                 "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

class Frame {
public:
  Frame(const Polygon& polygon, const SvgStyle& style) : style_(style) {
    lo_ = hi_ = polygon[0];
    for (const auto& v : polygon.vertices()) {
      lo_ = lo_.cwiseMin(v);
      hi_ = hi_.cwiseMax(v);
    }
    const double extent = std::max(hi_.x() - lo_.x(), hi_.y() - lo_.y());
    scale_ = (style.size - 2.0 * style.margin) / extent;
  }

  // y grows downwards in SVG
  std::string point(const Vec2& p) const {
    const double x = style_.margin + (p.x() - lo_.x()) * scale_;
    const double y = style_.size - style_.margin - (p.y() - lo_.y()) * scale_;
    return number(x) + "," + number(y);
  }

  std::string points(const Polygon& poly) const {
    std::string out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (k > 0) out += ' ';
      out += point(poly[k]);
    }
    return out;
  }

  double x(const Vec2& p) const { return style_.margin + (p.x() - lo_.x()) * scale_; }
  double y(const Vec2& p) const { return style_.size - style_.margin - (p.y() - lo_.y()) * scale_; }

private:
  SvgStyle style_;
  Vec2 lo_, hi_;
  double scale_ = 1.0;
};

}  // namespace

void write_svg(std::ostream& out, const PowerDiagram& diagram, const SvgStyle& style) {
  const Frame frame(diagram.polygon, style);
  const std::string size = number(style.size);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "  <g id=\"cells\" stroke=\"#333333\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < diagram.cells.size(); ++i) {
    if (diagram.cells[i].empty()) continue;
    out << "    <polygon fill=\"" << kPalette[i % kPalette.size()] << "\" points=\""
        << frame.points(diagram.cells[i]) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <polygon id=\"outline\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\""
      << frame.points(diagram.polygon) << "\"/>\n";
  out << "  <g id=\"sites\" fill=\"#000000\">\n";
  for (Eigen::Index i = 0; i < diagram.sites.cols(); ++i) {
    const Vec2 p = diagram.sites.col(i);
    out << "    <circle cx=\"" << number(frame.x(p)) << "\" cy=\"" << number(frame.y(p)) << "\" r=\""
        << number(style.site_radius) << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
}

std::string to_svg(const PowerDiagram& diagram, const SvgStyle& style) {
  std::ostringstream out;
  write_svg(out, diagram, style);
  return out.str();
}

}  // namespace confspace
