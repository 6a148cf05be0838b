#ifndef CONFSPACE_CONFIGURATION_HPP
#define CONFSPACE_CONFIGURATION_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "confspace/cell_label.hpp"

namespace confspace {

/// n labeled points in R^d stored as the columns of a d x n matrix.
template <typename Scalar>
using Configuration = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ConfigurationXd = Configuration<double>;
using ConfigurationXi = Configuration<std::int64_t>;

/// Whether the columns are pairwise distinct, i.e. the configuration lies in
/// F(R^d, n).
template <typename Derived>
bool has_distinct_points(const Eigen::MatrixBase<Derived>& points) {
  for (Eigen::Index a = 0; a < points.cols(); ++a)
    for (Eigen::Index b = a + 1; b < points.cols(); ++b)
      if (points.col(a) == points.col(b)) return false;
  return true;
}

namespace detail {

template <typename Derived, typename Equal>
CellLabel lexicographic_label(const Eigen::MatrixBase<Derived>& points, Equal equal) {
  const int d = static_cast<int>(points.rows());
  const int n = static_cast<int>(points.cols());
  if (d < 1 || n < 1) throw InvalidLabel("configuration needs d >= 1 and n >= 1");

  // first coordinate where columns a and b differ, or d when they coincide
  auto first_difference = [&](int a, int b) {
    int i = 0;
    while (i < d && equal(points(i, a), points(i, b))) ++i;
    return i;
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // stable: coincident points keep ascending labels
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int i = first_difference(a, b);
    return i < d && points(i, a) < points(i, b);
  });

  std::vector<int> sigma(n);
  std::vector<int> seps(n > 0 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) sigma[k] = order[k] + 1;
  for (int k = 0; k + 1 < n; ++k) seps[k] = first_difference(order[k], order[k + 1]) + 1;
  return CellLabel(d, std::move(sigma), std::move(seps));
}

}  // namespace detail

/// The stratification label of the stratum containing `points`: columns are
/// sorted lexicographically and each adjacent pair records the first
/// coordinate (1-based) in which they differ, or d+1 when they coincide.
/// Comparisons are exact.
template <typename Derived>
CellLabel fox_neuwirth_label(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  return detail::lexicographic_label(points, [](const Scalar& x, const Scalar& y) { return x == y; });
}

/// Variant for noisy data: coordinates within `epsilon` count as equal.
/// Fuzzy equality is not transitive, so labels of near-degenerate inputs
/// depend on the input order; prefer the exact overload.
CellLabel fox_neuwirth_label(const Eigen::MatrixXd& points, double epsilon);

/// Relative-interior point of the stratum (or cell) named by `label`,
/// with every coordinate scaled by n so it stays integral. The true point is
/// numerators / denominator with denominator = n.
struct ScaledConfiguration {
  ConfigurationXi numerators;
  std::int64_t denominator = 1;

  ConfigurationXd to_real() const { return numerators.cast<double>() / static_cast<double>(denominator); }
};

/// Walks x_{sigma_1} = 0, x_{sigma_{j+1}} = x_{sigma_j} + e_{i_j} (with
/// e_{d+1} = 0) and subtracts the barycenter.
ScaledConfiguration vertex_coordinates(const CellLabel& label);

}  // namespace confspace

#endif  // CONFSPACE_CONFIGURATION_HPP
