#include "confspace/equipartition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace confspace {

Eigen::VectorXd mass_residual(const PowerDiagram& diagram) {
  const int n = diagram.size();
  return Eigen::VectorXd::Constant(n, 1.0 / n) - diagram.masses();
}

namespace {

// integral over a convex polygon of |x - s|^2, by a fan of triangles
double second_moment(const Polygon& poly, const Vec2& s) {
  double total = 0.0;
  const Vec2 a = poly[0] - s;
  for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
    const Vec2 b = poly[k] - s;
    const Vec2 c = poly[k + 1] - s;
    const double area = 0.5 * cross<double>(b - a, c - a);
    total += area * (a.squaredNorm() + b.squaredNorm() + c.squaredNorm() + a.dot(b) + b.dot(c) + c.dot(a)) / 6.0;
  }
  return total;
}

}  // namespace

double kantorovich_dual(const PowerDiagram& diagram) {
  const int n = diagram.size();
  const double total_area = diagram.polygon.area();
  double value = diagram.weights.sum() / n;
  for (int i = 0; i < n; ++i) {
    if (diagram.cells[i].empty()) continue;
    const double moment = second_moment(diagram.cells[i], diagram.sites.col(i));
    value += (moment - diagram.weights(i) * diagram.areas(i)) / total_area;
  }
  return value;
}

Eigen::VectorXd interior_start_weights(const Polygon& polygon, const Sites& sites) {
  const int n = static_cast<int>(sites.cols());
  const Vec2 c = polygon.centroid();
  // a shrunk site is usable when it is inside the polygon with some margin
  auto inside = [&polygon](const Vec2& y) {
    const std::size_t m = polygon.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Vec2 edge = polygon[(k + 1) % m] - polygon[k];
      if (cross<double>(edge, y - polygon[k]) <= 1e-9 * edge.norm()) return false;
    }
    return true;
  };
  double s = 1.0;
  for (int halvings = 0; halvings < 200; ++halvings) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = inside(c + s * (sites.col(i) - c));
    if (ok) break;
    s *= 0.5;
  }
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 x = sites.col(i);
    const Vec2 y = c + s * (x - c);
    w(i) = x.squaredNorm() - y.squaredNorm() / s;
  }
  return normalize_weights(w);
}

WeightSolveResult solve_equal_measure_weights(const Polygon& polygon, const Sites& sites, double tol,
                                              const WeightSolveOptions& options) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int n = static_cast<int>(sites.cols());
  if (n < 1) throw std::invalid_argument("need at least one site");

  WeightSolveResult result;
  if (n == 1) {
    result.weights = Eigen::VectorXd::Zero(1);
    result.diagram = power_diagram(polygon, sites, result.weights);
    return result;
  }

  const Eigen::VectorXd safe = interior_start_weights(polygon, sites);
  Eigen::VectorXd w = safe;
  PowerDiagram diagram = power_diagram(polygon, sites, w);
  if (options.initial) {
    if (options.initial->size() != n) throw std::invalid_argument("initial weights have the wrong size");
    const Eigen::VectorXd start = normalize_weights(*options.initial);
    for (double t = 1.0; t > 1e-12; t *= 0.5) {
      const Eigen::VectorXd candidate = safe + t * (start - safe);
      PowerDiagram trial = power_diagram(polygon, sites, candidate);
      if (trial.all_cells_nonempty()) {
        w = candidate;
        diagram = std::move(trial);
        break;
      }
    }
  }
  if (!diagram.all_cells_nonempty()) throw ConvergenceError("could not find weights with all cells nonempty");

  const double total_area = polygon.area();
  const double floor_mass = 0.5 * std::min(diagram.masses().minCoeff(), 1.0 / n);
  Eigen::VectorXd residual = mass_residual(diagram);

  for (int it = 0; it < options.max_iterations; ++it) {
    if (residual.cwiseAbs().maxCoeff() <= tol) {
      result.weights = w;
      result.diagram = std::move(diagram);
      result.iterations = it;
      result.residual = residual.cwiseAbs().maxCoeff();
      return result;
    }

    // Newton step on the zero-sum subspace: J delta = residual
    const Eigen::MatrixXd jac = area_jacobian(diagram) / total_area;
    const double shift = std::max(jac.diagonal().mean(), std::numeric_limits<double>::min());
    const Eigen::MatrixXd system = jac + Eigen::MatrixXd::Constant(n, n, shift / n);
    Eigen::VectorXd delta = system.ldlt().solve(residual);
    if (!delta.allFinite()) delta = system.fullPivLu().solve(residual);
    delta.array() -= delta.mean();

    const double norm = residual.norm();
    bool accepted = false;
    for (double step = 1.0; step > 1e-10; step *= 0.5) {
      const Eigen::VectorXd candidate = w + step * delta;
      PowerDiagram trial = power_diagram(polygon, sites, candidate);
      if (!trial.all_cells_nonempty() || trial.masses().minCoeff() < floor_mass) continue;
      Eigen::VectorXd trial_residual = mass_residual(trial);
      if (trial_residual.norm() > (1.0 - 0.5 * step) * norm) continue;
      w = trial.weights;
      diagram = std::move(trial);
      residual = std::move(trial_residual);
      accepted = true;
      break;
    }
    if (!accepted)
      throw ConvergenceError("weight solver stalled at residual " + std::to_string(residual.cwiseAbs().maxCoeff()), w);
  }
  throw ConvergenceError("weight solver hit the iteration cap", w);
}

namespace {

struct Evaluation {
  Sites sites;
  Eigen::VectorXd weights;
  PowerDiagram diagram;
};

class PerimeterProblem {
public:
  PerimeterProblem(const Polygon& polygon, int n, const EqualizeOptions& options)
      : polygon_(polygon), n_(n), options_(options), center_(polygon.centroid()) {}

  int dimension() const { return 2 * (n_ - 1); }

  Sites sites_from(const Eigen::VectorXd& z) const {
    Sites sites(2, n_);
    Vec2 sum = Vec2::Zero();
    for (int i = 0; i + 1 < n_; ++i) {
      sites.col(i) = z.segment<2>(2 * i);
      sum += sites.col(i);
    }
    sites.col(n_ - 1) = n_ * center_ - sum;
    return sites;
  }

  std::optional<Evaluation> evaluate(const Eigen::VectorXd& z) {
    ++evaluations_;
    Sites sites = sites_from(z);
    if (!sites.allFinite()) return std::nullopt;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((sites.col(i) - sites.col(j)).norm() < 1e-9) return std::nullopt;
    WeightSolveOptions inner;
    inner.initial = warm_;
    try {
      auto solved = solve_equal_measure_weights(polygon_, sites, options_.weight_tol, inner);
      warm_ = solved.weights;
      return Evaluation{std::move(sites), std::move(solved.weights), std::move(solved.diagram)};
    } catch (const ConvergenceError&) {
      return std::nullopt;
    }
  }

  // perimeter variance; failures get a large constant so the simplex moves away
  double objective(const Eigen::VectorXd& z) {
    const auto eval = evaluate(z);
    if (!eval) return kPenalty;
    const Eigen::VectorXd& per = eval->diagram.perimeters;
    return (per.array() - per.mean()).square().sum();
  }

  // perimeter differences against the last cell
  std::optional<Eigen::VectorXd> residuals(const Eigen::VectorXd& z) {
    const auto eval = evaluate(z);
    if (!eval) return std::nullopt;
    const Eigen::VectorXd& per = eval->diagram.perimeters;
    return Eigen::VectorXd(per.head(n_ - 1).array() - per(n_ - 1));
  }

  int evaluations() const { return evaluations_; }
  void reset_warm_start() { warm_.reset(); }

  static constexpr double kPenalty = 1e6;

private:
  const Polygon& polygon_;
  int n_;
  EqualizeOptions options_;
  Vec2 center_;
  std::optional<Eigen::VectorXd> warm_;
  int evaluations_ = 0;
};

Eigen::VectorXd nelder_mead(PerimeterProblem& problem, const Eigen::VectorXd& start, double step, int max_evals,
                            double target) {
  const int dim = static_cast<int>(start.size());
  std::vector<Eigen::VectorXd> simplex(dim + 1, start);
  std::vector<double> values(dim + 1);
  for (int k = 0; k < dim; ++k) simplex[k + 1](k) += step;
  for (int k = 0; k <= dim; ++k) values[k] = problem.objective(simplex[k]);
  int evals = dim + 1;

  std::vector<int> order(dim + 1);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&values](int a, int b) { return values[a] < values[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second = order[dim - 1];
    if (values[best] <= target || values[worst] - values[best] <= 1e-30) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (int k = 0; k <= dim; ++k)
      if (k != worst) centroid += simplex[k];
    centroid /= dim;

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double fr = problem.objective(reflected);
    ++evals;
    if (fr < values[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = problem.objective(expanded);
      ++evals;
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = problem.objective(contracted);
    ++evals;
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (int k = 0; k <= dim; ++k) {
      if (k == best) continue;
      simplex[k] = simplex[best] + 0.5 * (simplex[k] - simplex[best]);
      values[k] = problem.objective(simplex[k]);
      ++evals;
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return simplex[static_cast<std::size_t>(it - values.begin())];
}

// Minimum-norm Gauss-Newton on the perimeter differences with central
// finite-difference Jacobians and step halving.
Eigen::VectorXd gauss_newton(PerimeterProblem& problem, Eigen::VectorXd z, double h, int iterations, double tol) {
  auto r = problem.residuals(z);
  if (!r) return z;
  for (int it = 0; it < iterations; ++it) {
    if (r->cwiseAbs().maxCoeff() <= 0.01 * tol) break;
    Eigen::MatrixXd jac(r->size(), z.size());
    bool ok = true;
    for (Eigen::Index k = 0; k < z.size() && ok; ++k) {
      Eigen::VectorXd plus = z, minus = z;
      plus(k) += h;
      minus(k) -= h;
      const auto rp = problem.residuals(plus);
      const auto rm = problem.residuals(minus);
      ok = rp && rm;
      if (ok) jac.col(k) = (*rp - *rm) / (2.0 * h);
    }
    if (!ok) break;
    const Eigen::VectorXd delta = -jac.completeOrthogonalDecomposition().solve(*r);
    bool improved = false;
    for (double step = 1.0; step > 1e-6; step *= 0.5) {
      const Eigen::VectorXd candidate = z + step * delta;
      const auto rc = problem.residuals(candidate);
      if (rc && rc->norm() < r->norm()) {
        z = candidate;
        r = rc;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return z;
}

Vec2 random_point_in(const Polygon& polygon, std::mt19937_64& rng) {
  Vec2 lo = polygon[0], hi = polygon[0];
  for (const auto& v : polygon.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::uniform_real_distribution<double> ux(lo.x(), hi.x());
  std::uniform_real_distribution<double> uy(lo.y(), hi.y());
  for (;;) {
    const Vec2 p(ux(rng), uy(rng));
    if (polygon.contains(p)) return p;
  }
}

}  // namespace

EqualizeResult equalize_perimeters(const Polygon& polygon, int n, double tol, std::uint64_t seed,
                                   const EqualizeOptions& options) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  EqualizeResult best;
  best.spread = std::numeric_limits<double>::infinity();
  if (n == 1) {
    best.sites = Sites(2, 1);
    best.sites.col(0) = polygon.centroid();
    best.weights = Eigen::VectorXd::Zero(1);
    best.diagram = power_diagram(polygon, best.sites, best.weights);
    best.spread = 0.0;
    best.converged = true;
    return best;
  }

  PerimeterProblem problem(polygon, n, options);
  std::mt19937_64 rng(seed);
  double diameter = 0.0;
  for (const auto& a : polygon.vertices())
    for (const auto& b : polygon.vertices()) diameter = std::max(diameter, (a - b).norm());

  for (int start = 0; start < options.starts; ++start) {
    // random sites in the polygon, translated so their centroid is the
    // polygon centroid; translating all sites does not change the diagram family
    Sites sites(2, n);
    for (int i = 0; i < n; ++i) sites.col(i) = random_point_in(polygon, rng);
    const Vec2 shift = polygon.centroid() - sites.rowwise().mean();
    sites.colwise() += shift;
    Eigen::VectorXd z(problem.dimension());
    for (int i = 0; i + 1 < n; ++i) z.segment<2>(2 * i) = sites.col(i);

    problem.reset_warm_start();
    const double target = std::pow(1e-4 * tol, 2);
    z = nelder_mead(problem, z, 0.1 * diameter, options.simplex_evaluations, target);
    z = gauss_newton(problem, z, 1e-7 * diameter, options.polish_iterations, tol);

    const auto eval = problem.evaluate(z);
    if (!eval || !eval->diagram.all_cells_nonempty()) continue;
    const double spread = perimeter_spread(eval->diagram);
    if (spread < best.spread) {
      best.sites = eval->sites;
      best.weights = eval->weights;
      best.diagram = eval->diagram;
      best.spread = spread;
      best.start_index = start;
    }
    if (spread <= tol) break;
  }
  best.iterations = problem.evaluations();
  best.converged = best.spread <= tol;
  if (!std::isfinite(best.spread)) throw ConvergenceError("no start produced an equal-area diagram");
  return best;
}

}  // namespace confspace
