#ifndef CONFSPACE_POWER_DIAGRAM_HPP
#define CONFSPACE_POWER_DIAGRAM_HPP

#include <Eigen/Dense>
#include <vector>

#include "confspace/polygon.hpp"

namespace confspace {

/// Sites as the columns of a 2 x n matrix.
using Sites = Eigen::Matrix2Xd;

/// Power diagram of `sites` with weights `weights`, clipped to a convex
/// polygon:
///
///   P_i = { x in P : |x - x_i|^2 - w_i <= |x - x_j|^2 - w_j for all j }.
///
/// Weights are stored normalized to zero sum; adding a constant to all
/// weights does not change the cells.
struct PowerDiagram {
  Polygon polygon;
  Sites sites;
  Eigen::VectorXd weights;
  std::vector<Polygon> cells;
  Eigen::VectorXd areas;
  Eigen::VectorXd perimeters;
  /// interface(i, j): length of the common edge of cells i and j.
  Eigen::MatrixXd interface;

  int size() const { return static_cast<int>(cells.size()); }
  /// areas / area(polygon).
  Eigen::VectorXd masses() const { return areas / polygon.area(); }
  bool all_cells_nonempty() const;
};

/// Subtracts the mean.
Eigen::VectorXd normalize_weights(const Eigen::VectorXd& weights);

/// Throws std::invalid_argument on coincident sites or a size mismatch.
PowerDiagram power_diagram(const Polygon& polygon, const Sites& sites, const Eigen::VectorXd& weights);

/// Index minimizing |x - x_i|^2 - w_i; ties go to the lowest index.
int locate(const Sites& sites, const Eigen::VectorXd& weights, const Vec2& x);

/// Jacobian of the cell areas with respect to the weights:
/// d area_i / d w_j = -len_ij / (2 |x_i - x_j|) for j != i, rows sum to 0.
/// Symmetric positive semidefinite with the constant vector in its kernel.
Eigen::MatrixXd area_jacobian(const PowerDiagram& diagram);

/// max_i perimeter_i - min_i perimeter_i. Throws if a cell is empty.
double perimeter_spread(const PowerDiagram& diagram);

}  // namespace confspace

#endif  // CONFSPACE_POWER_DIAGRAM_HPP
