#include "confspace/configuration.hpp"

#include <cmath>

namespace confspace {

CellLabel fox_neuwirth_label(const Eigen::MatrixXd& points, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  return detail::lexicographic_label(points,
                                     [epsilon](double x, double y) { return std::abs(x - y) <= epsilon; });
}

ScaledConfiguration vertex_coordinates(const CellLabel& label) {
  label.require(ComplexKind::stratification);
  const int d = label.d();
  const int n = label.n();

  ConfigurationXi walk = ConfigurationXi::Zero(d, n);
  for (int j = 0; j + 1 < n; ++j) {
    const int from = label.sigma()[j] - 1;
    const int to = label.sigma()[j + 1] - 1;
    walk.col(to) = walk.col(from);
    const int i = label.seps()[j];
    if (i <= d) walk(i - 1, to) += 1;
  }

  ScaledConfiguration out;
  out.denominator = n;
  const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> sums = walk.rowwise().sum();
  out.numerators = (walk * n).colwise() - sums;
  return out;
}

}  // namespace confspace
