#include "confspace/polygon.hpp"

#include <numbers>

namespace confspace {

Polygon unit_square() { return Polygon({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}); }

Polygon unit_equilateral_triangle() {
  return Polygon({Vec2(0, 0), Vec2(1, 0), Vec2(0.5, std::sqrt(3.0) / 2.0)});
}

Polygon regular_polygon(int m, double r) {
  if (m < 3) throw std::invalid_argument("regular polygon needs at least 3 sides");
  std::vector<Vec2> vertices;
  for (int k = 0; k < m; ++k) {
    const double t = 2.0 * std::numbers::pi * k / m;
    vertices.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  return Polygon(std::move(vertices));
}

}  // namespace confspace
