#ifndef CONFSPACE_EQUIPARTITION_HPP
#define CONFSPACE_EQUIPARTITION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "confspace/power_diagram.hpp"

namespace confspace {

class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what, Eigen::VectorXd last_weights = {})
      : std::runtime_error(what), last_weights_(std::move(last_weights)) {}

  /// Best weights reached before giving up; empty when none were feasible.
  const Eigen::VectorXd& last_weights() const { return last_weights_; }

private:
  Eigen::VectorXd last_weights_;
};

/// 1/n - mass(P_i): the gradient of the concave Kantorovich dual
///   sum_i w_i / n + integral_P min_i (|x - x_i|^2 - w_i) dmu
/// with mu the uniform probability measure on the polygon.
Eigen::VectorXd mass_residual(const PowerDiagram& diagram);

/// The dual above, evaluated exactly by splitting the integral over cells.
double kantorovich_dual(const PowerDiagram& diagram);

/// Zero-sum weights whose power diagram is the Voronoi diagram of the sites
/// shrunk towards the polygon centroid until they are interior, so every
/// cell contains its shrunk site and has positive area.
Eigen::VectorXd interior_start_weights(const Polygon& polygon, const Sites& sites);

struct WeightSolveOptions {
  int max_iterations = 10'000;
  /// Starting weights. If some cell is empty there, the start is pulled
  /// towards `interior_start_weights` until all cells are nonempty.
  std::optional<Eigen::VectorXd> initial;
};

struct WeightSolveResult {
  Eigen::VectorXd weights;
  PowerDiagram diagram;
  int iterations = 0;
  /// max_i |mass_i - 1/n| at the returned weights.
  double residual = 0.0;
};

/// Weights w with |mass(P_i) - 1/n| <= tol for all i and sum w = 0.
///
/// Damped Newton ascent on the dual using the area Jacobian; a step is
/// halved until no cell loses more than half of the smallest initial mass
/// and the residual norm decreases by the factor (1 - step/2). Deterministic
/// for fixed inputs. Throws ConvergenceError when the iteration cap is hit
/// or the step collapses.
WeightSolveResult solve_equal_measure_weights(const Polygon& polygon, const Sites& sites, double tol,
                                              const WeightSolveOptions& options = {});

struct EqualizeOptions {
  int starts = 24;
  int simplex_evaluations = 3000;
  int polish_iterations = 60;
  /// Inner weight tolerance; kept far below the outer one so finite
  /// differences of the perimeters are meaningful.
  double weight_tol = 1e-13;
};

struct EqualizeResult {
  Sites sites;
  Eigen::VectorXd weights;
  PowerDiagram diagram;
  double spread = 0.0;
  /// Objective evaluations over all starts.
  int iterations = 0;
  int start_index = 0;
  bool converged = false;
};

/// Searches site positions whose equal-area power diagram also has equal
/// perimeters. Sites keep their centroid at the polygon centroid. Each
/// seeded start runs a Nelder-Mead search on the perimeter variance and
/// then Gauss-Newton on the perimeter differences; starts run in order and
/// the first one with spread <= tol wins, otherwise the smallest spread
/// (ties by start index) is returned with converged = false.
EqualizeResult equalize_perimeters(const Polygon& polygon, int n, double tol, std::uint64_t seed,
                                   const EqualizeOptions& options = {});

}  // namespace confspace

#endif  // CONFSPACE_EQUIPARTITION_HPP
