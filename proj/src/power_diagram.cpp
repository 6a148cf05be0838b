#include "confspace/power_diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace confspace {

namespace {

constexpr int kBoundaryTag = -1;

// Convex polygon whose edge k (vertex k to k+1) remembers which constraint
// produced it: kBoundaryTag for the ambient polygon, otherwise the index of
// the neighbouring site.
struct TaggedPolygon {
  std::vector<Vec2> vertices;
  std::vector<int> tags;
};

TaggedPolygon clip_tagged(const TaggedPolygon& poly, const Vec2& a, double c, int tag) {
  TaggedPolygon out;
  const std::size_t m = poly.vertices.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Vec2& p = poly.vertices[k];
    const Vec2& q = poly.vertices[(k + 1) % m];
    const double fp = a.dot(p) - c;
    const double fq = a.dot(q) - c;
    if (fp < 0.0 && fq > 0.0) {
      // leaving: the edge from the exit point runs along the clip line
      out.vertices.push_back(p);
      out.tags.push_back(poly.tags[k]);
      out.vertices.push_back(p + fp / (fp - fq) * (q - p));
      out.tags.push_back(tag);
    } else if (fp <= 0.0) {
      out.vertices.push_back(p);
      out.tags.push_back(fq > 0.0 ? tag : poly.tags[k]);
    } else if (fq < 0.0) {
      out.vertices.push_back(p + fp / (fp - fq) * (q - p));
      out.tags.push_back(poly.tags[k]);
    }
  }
  // drop degenerate edges; the surviving edge keeps the tag of the next one
  for (std::size_t k = 0; k < out.vertices.size() && out.vertices.size() > 1;) {
    const std::size_t next = (k + 1) % out.vertices.size();
    if ((out.vertices[next] - out.vertices[k]).norm() <= kMergeEpsilon) {
      out.vertices.erase(out.vertices.begin() + static_cast<std::ptrdiff_t>(k));
      out.tags.erase(out.tags.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  if (out.vertices.size() < 3) return {};
  return out;
}

double shoelace(const std::vector<Vec2>& v) {
  double twice = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) twice += cross<double>(v[k], v[(k + 1) % v.size()]);
  return 0.5 * twice;
}

}  // namespace

bool PowerDiagram::all_cells_nonempty() const {
  return std::none_of(cells.begin(), cells.end(), [](const Polygon& c) { return c.empty(); });
}

Eigen::VectorXd normalize_weights(const Eigen::VectorXd& weights) {
  if (weights.size() == 0) return weights;
  return weights.array() - weights.mean();
}

PowerDiagram power_diagram(const Polygon& polygon, const Sites& sites, const Eigen::VectorXd& weights) {
  const int n = static_cast<int>(sites.cols());
  if (n < 1) throw std::invalid_argument("power diagram needs at least one site");
  if (weights.size() != n) throw std::invalid_argument("one weight per site required");
  if (polygon.empty()) throw std::invalid_argument("power diagram of an empty polygon");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sites.col(i) == sites.col(j)) throw std::invalid_argument("coincident sites");

  PowerDiagram out;
  out.polygon = polygon;
  out.sites = sites;
  out.weights = normalize_weights(weights);
  out.areas = Eigen::VectorXd::Zero(n);
  out.perimeters = Eigen::VectorXd::Zero(n);
  out.interface = Eigen::MatrixXd::Zero(n, n);
  out.cells.reserve(n);

  const Eigen::VectorXd& w = out.weights;
  for (int i = 0; i < n; ++i) {
    TaggedPolygon cell{polygon.vertices(), std::vector<int>(polygon.size(), kBoundaryTag)};
    const Vec2 xi = sites.col(i);
    for (int j = 0; j < n && !cell.vertices.empty(); ++j) {
      if (j == i) continue;
      const Vec2 xj = sites.col(j);
      // |x - x_i|^2 - w_i <= |x - x_j|^2 - w_j
      const Vec2 a = 2.0 * (xj - xi);
      const double c = xj.squaredNorm() - xi.squaredNorm() - w(j) + w(i);
      cell = clip_tagged(cell, a, c, j);
    }
    if (cell.vertices.empty() || !(shoelace(cell.vertices) >= kAreaEpsilon)) {
      out.cells.emplace_back();
      continue;
    }
    for (std::size_t k = 0; k < cell.vertices.size(); ++k) {
      const double len = (cell.vertices[(k + 1) % cell.vertices.size()] - cell.vertices[k]).norm();
      out.perimeters(i) += len;
      if (cell.tags[k] != kBoundaryTag) out.interface(i, cell.tags[k]) += len;
    }
    out.areas(i) = shoelace(cell.vertices);
    out.cells.push_back(Polygon::from_clipped(std::move(cell.vertices)));
  }
  out.interface = 0.5 * (out.interface + out.interface.transpose()).eval();
  return out;
}

int locate(const Sites& sites, const Eigen::VectorXd& weights, const Vec2& x) {
  int best = 0;
  double best_value = (x - sites.col(0)).squaredNorm() - weights(0);
  for (int i = 1; i < sites.cols(); ++i) {
    const double value = (x - sites.col(i)).squaredNorm() - weights(i);
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  return best;
}

Eigen::MatrixXd area_jacobian(const PowerDiagram& diagram) {
  const int n = diagram.size();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || diagram.interface(i, j) == 0.0) continue;
      const double coupling = diagram.interface(i, j) / (2.0 * (diagram.sites.col(i) - diagram.sites.col(j)).norm());
      jac(i, j) = -coupling;
      jac(i, i) += coupling;
    }
  }
  return jac;
}

double perimeter_spread(const PowerDiagram& diagram) {
  if (!diagram.all_cells_nonempty()) throw std::invalid_argument("perimeter spread with an empty cell");
  if (diagram.size() <= 1) return 0.0;
  return diagram.perimeters.maxCoeff() - diagram.perimeters.minCoeff();
}

}  // namespace confspace
