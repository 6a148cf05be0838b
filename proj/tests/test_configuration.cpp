#include <doctest.h>

#include <random>

#include "confspace/configuration.hpp"
#include "confspace/face_poset.hpp"

using namespace confspace;

namespace {

ConfigurationXd columns(std::initializer_list<std::pair<double, double>> pts) {
  ConfigurationXd m(2, static_cast<Eigen::Index>(pts.size()));
  Eigen::Index k = 0;
  for (auto [x, y] : pts) {
    m(0, k) = x;
    m(1, k) = y;
    ++k;
  }
  return m;
}

}  // namespace

TEST_CASE("vertex_coordinates examples") {
  {
    const auto v = vertex_coordinates(parse_label("1<1 3<1 2", 1));
    CHECK(v.denominator == 3);
    CHECK(v.numerators == (ConfigurationXi(1, 3) << -3, 3, 0).finished());
  }
  {
    const auto v = vertex_coordinates(parse_label("1<1 2<2 3", 1));
    CHECK(v.numerators == (ConfigurationXi(1, 3) << -2, 1, 1).finished());
  }
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k) sigma[k] = k + 1;
    const auto v = vertex_coordinates(CellLabel(1, sigma, std::vector<int>(n - 1, 1)));
    // centered progression: x_k = k - (n-1)/2, scaled by n
    for (int k = 0; k < n; ++k) CHECK(2 * v.numerators(0, k) == n * (2 * k - (n - 1)));
  }
}

TEST_CASE("fox_neuwirth_label examples") {
  CHECK(format_label(fox_neuwirth_label(columns({{0, 0}, {1, 0}, {0, 1}}))) == "1<2 3<1 2");

  // the two configurations of the worked example in the plane
  const auto left = columns({{-2.4, 0.2}, {0, 3}, {-3, 1.5}, {-2.4, 3.5}, {0, 2.25}, {0, 0.75}, {-1, 1.5}, {-3, 2.3}});
  CHECK(fox_neuwirth_label(left) == parse_label("3<2 8<1 1<2 4<1 7<1 6<2 5<2 2", 2));
  const auto right =
      columns({{-3, 1.5}, {0, 3}, {-3, 0.375}, {-3, 3.375}, {0, 2.25}, {0, 0.75}, {-1, 1.5}, {-3, 2.625}});
  CHECK(fox_neuwirth_label(right) == parse_label("3<2 1<2 8<2 4<1 7<1 6<2 5<2 2", 2));

  CHECK(format_label(fox_neuwirth_label(columns({{0, 0}, {0, 0}}))) == "1<3 2");
  CHECK(format_label(fox_neuwirth_label(columns({{1, 1}, {0, 0}, {1, 1}}))) == "2<1 1<3 3");
}

TEST_CASE("labels are translation invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    ConfigurationXi x(3, 5);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = coord(rng);
    Eigen::Matrix<std::int64_t, 3, 1> t;
    for (int i = 0; i < 3; ++i) t(i) = coord(rng) * 1000;
    const ConfigurationXi y = x.colwise() + t;
    CHECK(fox_neuwirth_label(x) == fox_neuwirth_label(y));
  }
}

TEST_CASE("epsilon variant") {
  const auto noisy = columns({{0, 0}, {1e-13, 1}});
  CHECK(format_label(fox_neuwirth_label(noisy)) == "1<1 2");
  CHECK(format_label(fox_neuwirth_label(noisy, 1e-12)) == "1<2 2");
}

TEST_CASE("has_distinct_points") {
  CHECK(has_distinct_points(columns({{0, 0}, {1, 0}})));
  CHECK_FALSE(has_distinct_points(columns({{0, 0}, {0, 0}})));
}

TEST_CASE("vertex coordinates round trip") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 4; ++n) {
      for (ComplexKind kind : {ComplexKind::complement, ComplexKind::stratification}) {
        bool ok = true, centered = true;
        for (const auto& label : enumerate_labels(d, n, kind)) {
          const auto v = vertex_coordinates(label);
          ok = ok && fox_neuwirth_label(v.numerators) == label;
          centered = centered && (v.numerators.rowwise().sum().array() == 0).all();
        }
        CAPTURE(d);
        CAPTURE(n);
        CHECK(ok);
        CHECK(centered);
      }
    }
  }
}
