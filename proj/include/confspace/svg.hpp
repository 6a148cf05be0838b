#ifndef CONFSPACE_SVG_HPP
#define CONFSPACE_SVG_HPP

#include <ostream>
#include <string>

#include "confspace/power_diagram.hpp"

namespace confspace {

struct SvgStyle {
  double size = 512.0;
  double margin = 16.0;
  double site_radius = 3.0;
};

/// Polygon outline, cells filled from a rotating palette, sites as dots.
/// Output depends only on the diagram, so identical inputs give identical
/// bytes.
void write_svg(std::ostream& out, const PowerDiagram& diagram, const SvgStyle& style = {});
std::string to_svg(const PowerDiagram& diagram, const SvgStyle& style = {});

}  // namespace confspace

#endif  // CONFSPACE_SVG_HPP
