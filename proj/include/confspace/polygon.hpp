#ifndef CONFSPACE_POLYGON_HPP
#define CONFSPACE_POLYGON_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace confspace {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// Areas below this count as empty.
inline constexpr double kAreaEpsilon = 1e-15;
/// Vertices closer than this are merged.
inline constexpr double kMergeEpsilon = 1e-12;

template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Convex polygon with counterclockwise vertices, or the empty set.
template <typename Scalar>
class ConvexPolygon {
public:
  using Point = Point2<Scalar>;

  ConvexPolygon() = default;

  /// Validates convexity and positive area. Clockwise input is reversed;
  /// duplicate and collinear vertices are dropped.
  explicit ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    cleanup();
    if (vertices_.size() < 3) throw std::invalid_argument("polygon needs three non-collinear vertices");
    if (signed_area() < 0) std::reverse(vertices_.begin(), vertices_.end());
    if (!(area() > Scalar(kAreaEpsilon))) throw std::invalid_argument("polygon has no area");
    const std::size_t m = vertices_.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Point& a = vertices_[k];
      const Point& b = vertices_[(k + 1) % m];
      const Point& c = vertices_[(k + 2) % m];
      if (cross<Scalar>(b - a, c - b) <= Scalar(0)) throw std::invalid_argument("polygon is not convex");
    }
  }

  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t k) const { return vertices_[k]; }

  /// Shoelace.
  Scalar signed_area() const {
    Scalar twice(0);
    const std::size_t m = vertices_.size();
    for (std::size_t k = 0; k < m; ++k) twice += cross<Scalar>(vertices_[k], vertices_[(k + 1) % m]);
    return twice / Scalar(2);
  }
  Scalar area() const { return std::abs(signed_area()); }

  Scalar perimeter() const {
    Scalar total(0);
    const std::size_t m = vertices_.size();
    for (std::size_t k = 0; k < m; ++k) total += (vertices_[(k + 1) % m] - vertices_[k]).norm();
    return total;
  }

  Point centroid() const {
    if (empty()) throw std::logic_error("centroid of an empty polygon");
    Point acc = Point::Zero();
    Scalar twice(0);
    const std::size_t m = vertices_.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Point& a = vertices_[k];
      const Point& b = vertices_[(k + 1) % m];
      const Scalar w = cross<Scalar>(a, b);
      acc += (a + b) * w;
      twice += w;
    }
    return acc / (Scalar(3) * twice);
  }

  /// Closed containment.
  bool contains(const Point& x) const {
    const std::size_t m = vertices_.size();
    if (m == 0) return false;
    for (std::size_t k = 0; k < m; ++k)
      if (cross<Scalar>(vertices_[(k + 1) % m] - vertices_[k], x - vertices_[k]) < Scalar(0)) return false;
    return true;
  }

  /// Builds from already clipped vertices without the convexity check.
  static ConvexPolygon from_clipped(std::vector<Point> vertices) {
    ConvexPolygon out;
    out.vertices_ = std::move(vertices);
    out.cleanup();
    if (out.vertices_.size() < 3 || !(out.area() >= Scalar(kAreaEpsilon))) out.vertices_.clear();
    return out;
  }

private:
  void cleanup() {
    auto& v = vertices_;
    bool changed = true;
    while (changed && v.size() >= 3) {
      changed = false;
      for (std::size_t k = 0; k < v.size() && v.size() >= 3; ++k) {
        const std::size_t m = v.size();
        const Point& prev = v[(k + m - 1) % m];
        const Point& cur = v[k];
        const Point& next = v[(k + 1) % m];
        const Point in = cur - prev;
        const Point out = next - cur;
        const bool duplicate = in.norm() <= Scalar(kMergeEpsilon);
        const bool straight = std::abs(cross<Scalar>(in, out)) <= Scalar(kMergeEpsilon) * in.norm() * out.norm() &&
                              in.dot(out) >= Scalar(0);
        if (duplicate || straight) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
          changed = true;
          --k;
        }
      }
    }
    if (v.size() < 3) v.clear();
  }

  std::vector<Point> vertices_;
};

using Polygon = ConvexPolygon<double>;
using Vec2 = Point2<double>;

/// Intersection with {x : a.x <= c}. Empty when the remaining area is below
/// kAreaEpsilon.
template <typename Scalar>
ConvexPolygon<Scalar> clip_halfplane(const ConvexPolygon<Scalar>& poly, const Point2<Scalar>& a, Scalar c) {
  using Point = Point2<Scalar>;
  if (poly.empty()) return {};
  std::vector<Point> out;
  const std::size_t m = poly.size();
  out.reserve(m + 1);
  for (std::size_t k = 0; k < m; ++k) {
    const Point& p = poly[k];
    const Point& q = poly[(k + 1) % m];
    const Scalar fp = a.dot(p) - c;
    const Scalar fq = a.dot(q) - c;
    if (fp <= Scalar(0)) out.push_back(p);
    if ((fp < Scalar(0) && fq > Scalar(0)) || (fp > Scalar(0) && fq < Scalar(0))) {
      const Scalar t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return ConvexPolygon<Scalar>::from_clipped(std::move(out));
}

/// Axis-aligned [0,1]^2.
Polygon unit_square();
/// Equilateral triangle with unit side, base on the x-axis.
Polygon unit_equilateral_triangle();
/// Regular m-gon with circumradius r centered at the origin.
Polygon regular_polygon(int m, double r);

}  // namespace confspace

#endif  // CONFSPACE_POLYGON_HPP
