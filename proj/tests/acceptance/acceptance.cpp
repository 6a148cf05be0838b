// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "confspace/configuration.hpp"
#include "confspace/equipartition.hpp"
#include "confspace/face_poset.hpp"
#include "confspace/obstruction.hpp"

using namespace confspace;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::vector<std::uint64_t> pascal_row(int n) {
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (int k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = next;
  }
  return row;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 1;
}

BigInt weighted_sum(unsigned n, const RidgeOrbitCochain& b) {
  BigInt s = 0;
  for (unsigned j = 1; j < n; ++j) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, j);
    s += b.at(static_cast<int>(j)) * c;
  }
  return s;
}

double max_mass_error(const PowerDiagram& pd) { return (pd.masses().array() - 1.0 / pd.size()).abs().maxCoeff(); }

// --------------------------------------------------------------------------

bool cell_counts(std::string& detail) {
  const auto start = Clock::now();
  bool ok = true;
  for (auto [d, n] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}}) {
    const auto f = f_vector(enumerate_cells(d, n, ComplexKind::complement));
    const std::uint64_t nf = factorial(n);
    const int top = top_dimension(d, n);
    std::uint64_t total = nf;
    for (int k = 1; k < n; ++k) total *= static_cast<std::uint64_t>(d);
    const bool here = f.front() == nf && f.back() == nf && f[top - 1] == (n - 1) * nf &&
                      std::accumulate(f.begin(), f.end(), std::uint64_t{0}) == total;
    if (!here) detail += " mismatch at (" + std::to_string(d) + "," + std::to_string(n) + ")";
    ok = ok && here;
  }
  const double t = seconds_since(start);
  detail += " in " + std::to_string(t) + " s";
  return ok && t < 60;
}

bool hexagon_complex(std::string& detail) {
  const FacePoset p = enumerate_cells(2, 3, ComplexKind::complement);
  bool ok = f_vector(p) == std::vector<std::uint64_t>{6, 12, 6};
  for (std::size_t e : p.elements_of_dim(1)) ok = ok && p.upper_covers(e).size() == 3;
  std::vector<std::string> boundary;
  for (std::size_t e : p.lower_covers(*p.index_of(parse_label("123", 2))))
    boundary.push_back(format_bar_label(p.element(e)));
  std::vector<std::string> expected = {"1|23", "13|2", "3|12", "23|1", "2|13", "12|3"};
  std::sort(boundary.begin(), boundary.end());
  std::sort(expected.begin(), expected.end());
  ok = ok && boundary == expected;
  detail = " f=(6,12,6), three hexagons per edge, boundary of 123";
  return ok;
}

bool incidence(std::string& detail) {
  const auto start = Clock::now();
  bool ok = true;
  std::size_t facets = 0;
  for (auto [d, n] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 3}}) {
    const FacePoset p = enumerate_cells(d, n, ComplexKind::complement);
    const auto row = pascal_row(n);
    const std::vector<std::uint64_t> expected(row.begin() + 1, row.end() - 1);
    for (std::size_t f : p.elements_of_dim(p.max_dim())) {
      ++facets;
      ok = ok && facet_incidence_vector(p.element(f), p) == expected;
    }
  }
  const double t = seconds_since(start);
  detail = " " + std::to_string(facets) + " facets in " + std::to_string(t) + " s";
  return ok && t < 120;
}

bool roundtrip(std::string& detail) {
  std::size_t cells = 0;
  bool ok = true;
  for (int d = 1; d <= 3; ++d)
    for (int n = 2; n <= 4; ++n)
      for (const auto& label : enumerate_labels(d, n, ComplexKind::complement)) {
        ++cells;
        ok = ok && fox_neuwirth_label(vertex_coordinates(label).numerators) == label;
      }
  detail = " " + std::to_string(cells) + " cells, exact integer coordinates";
  return ok;
}

bool gcd_table(std::string& detail) {
  const auto start = Clock::now();
  bool ok = true;
  for (unsigned n = 2; n <= 64; ++n) ok = ok && binomial_gcd(n) == prime_power_base(n);
  ok = ok && binomial_gcd(4) == 2 && binomial_gcd(6) == 1 && binomial_gcd(9) == 3 && binomial_gcd(12) == 1 &&
       binomial_gcd(32) == 2;
  const double t = seconds_since(start);
  detail = " n=2..64 in " + std::to_string(t) + " s";
  return ok && t < 1;
}

bool classification(std::string& detail) {
  const char* expected[] = {"Z/2", "Z/3", "Z/2", "Z/5", "trivial", "Z/7", "Z/2", "Z/3"};
  bool ok = true;
  for (int n = 2; n <= 9; ++n) ok = ok && obstruction_report(2, n).group() == expected[n - 2];
  for (int n : {6, 10, 12}) ok = ok && obstruction_report(2, n).group() == "trivial";
  for (unsigned n : {6u, 10u, 12u, 15u, 30u}) ok = ok && weighted_sum(n, coboundary_witness(n)) == 1;
  detail = " groups for n=2..9, trivial at 6,10,12, witnesses at 6,10,12,15,30";
  return ok;
}

bool coboundary_on_complex(std::string& detail) {
  const auto start = Clock::now();
  const auto values = verify_coboundary_on_complex(2, 6, coboundary_witness(6));
  const bool ok = values.size() == factorial(6) &&
                  std::all_of(values.begin(), values.end(), [](const BigInt& v) { return v == 1; });
  const double t = seconds_since(start);
  detail = " full complex, value 1 on " + std::to_string(values.size()) + " facets in " + std::to_string(t) + " s";
  return ok && t < 600;
}

bool equal_area_weights(std::string& detail) {
  Sites two(2, 2);
  two << 0.25, 0.6, 0.5, 0.5;
  const auto closed = solve_equal_measure_weights(unit_square(), two, 1e-12);
  bool ok = std::abs(closed.weights(0) - 0.02625) <= 1e-9;

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0), w0(-0.05, 0.05);
  double slowest = 0, worst_gap = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Sites s(2, 5);
    for (int i = 0; i < 5; ++i) s.col(i) = Vec2(u(rng), u(rng));
    const auto start = Clock::now();
    const auto r = solve_equal_measure_weights(unit_square(), s, 1e-9);
    slowest = std::max(slowest, seconds_since(start));
    ok = ok && max_mass_error(r.diagram) <= 1e-9;

    const auto ref = solve_equal_measure_weights(unit_square(), s, 1e-11);
    for (int restart = 0; restart < 10; ++restart) {
      WeightSolveOptions opt;
      Eigen::VectorXd init(5);
      for (int i = 0; i < 5; ++i) init(i) = w0(rng);
      opt.initial = init;
      const auto again = solve_equal_measure_weights(unit_square(), s, 1e-11, opt);
      worst_gap = std::max(worst_gap, (again.weights - ref.weights).cwiseAbs().maxCoeff());
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, " w1=%.12f, slowest 5-site solve %.2e s, restart gap %.2e", closed.weights(0), slowest,
                worst_gap);
  detail = buf;
  return ok && slowest < 1.0 && worst_gap <= 1e-8;
}

bool equal_area_and_perimeter(std::string& detail) {
  struct Case {
    const char* name;
    Polygon polygon;
    int n;
  };
  const Case cases[] = {{"square", unit_square(), 2},
                        {"square", unit_square(), 3},
                        {"square", unit_square(), 4},
                        {"triangle", unit_equilateral_triangle(), 2},
                        {"triangle", unit_equilateral_triangle(), 3}};
  bool ok = true;
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const auto r = equalize_perimeters(c.polygon, c.n, 1e-6, 1);
    const double t = seconds_since(start);
    const bool here = r.spread <= 1e-6 && max_mass_error(r.diagram) <= 1e-9 && t < 300;
    char buf[160];
    std::snprintf(buf, sizeof buf, " %s/%d spread %.1e (%.2f s)%s", c.name, c.n, r.spread, t, here ? "" : " FAILED");
    detail += buf;
    ok = ok && here;
  }
  return ok;
}

bool property_suites(std::string& detail) {
  bool ok = true;
  for (auto [d, n] : {std::pair{2, 3}, {3, 3}, {2, 4}}) {
    const FacePoset p = enumerate_cells(d, n, ComplexKind::complement);
    const auto& cells = p.elements();
    const std::size_t m = cells.size();
    std::vector<char> rel(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = is_face_complement(cells[i], cells[j]);
    for (std::size_t i = 0; i < m; ++i) {
      ok = ok && rel[i * m + i];
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !rel[i * m + j]) continue;
        ok = ok && !rel[j * m + i];
        for (std::size_t k = 0; k < m; ++k) ok = ok && (!rel[j * m + k] || rel[i * m + k]);
      }
    }
    ok = ok && has_diamond_property(p) && covers_have_no_intermediate(p);

    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<std::vector<int>> group;
    do group.push_back(pi);
    while (std::next_permutation(pi.begin(), pi.end()));
    for (const auto& c : cells) {
      std::vector<CellLabel> orbit;
      for (const auto& g : group) orbit.push_back(group_action(g, c));
      std::sort(orbit.begin(), orbit.end());
      ok = ok && std::unique(orbit.begin(), orbit.end()) == orbit.end();
    }
    const auto& g = group.back();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        ok = ok && rel[i * m + j] == is_face_complement(group_action(g, cells[i]), group_action(g, cells[j]));
  }

  // dual gradient against finite differences, step 1e-6, tolerance 1e-5
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const double h = 1e-6;
  double fd_error = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 4 + trial;
    Sites s(2, n);
    for (int i = 0; i < n; ++i) s.col(i) = Vec2(u(rng), u(rng));
    const Polygon sq = unit_square();
    const Eigen::VectorXd w = interior_start_weights(sq, s);
    const auto pd = power_diagram(sq, s, w);
    const Eigen::MatrixXd J = area_jacobian(pd);
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd wp = w, wm = w;
      wp(j) += h;
      wm(j) -= h;
      const auto dp = power_diagram(sq, s, wp);
      const auto dm = power_diagram(sq, s, wm);
      fd_error = std::max(fd_error, std::abs((kantorovich_dual(dp) - kantorovich_dual(dm)) / (2 * h) -
                                             mass_residual(pd)(j)));
      fd_error = std::max(fd_error, ((dp.areas - dm.areas) / (2 * h) - J.col(j)).cwiseAbs().maxCoeff());
    }
  }
  ok = ok && fd_error < 1e-5;

  // rigid motion
  Sites s(2, 5);
  for (int i = 0; i < 5; ++i) s.col(i) = Vec2(u(rng), u(rng));
  const auto a = solve_equal_measure_weights(unit_square(), s, 1e-13);
  Eigen::Matrix2d R;
  R << std::cos(1.1), -std::sin(1.1), std::sin(1.1), std::cos(1.1);
  const Vec2 t(-2.0, 5.0);
  std::vector<Vec2> moved;
  for (const auto& v : unit_square().vertices()) moved.push_back(R * v + t);
  const auto b = solve_equal_measure_weights(Polygon(moved), (R * s).colwise() + t, 1e-13);
  double motion_error = 0;
  for (int i = 0; i < 5; ++i) {
    if (a.diagram.cells[i].size() != b.diagram.cells[i].size()) motion_error = 1;
    for (const auto& v : a.diagram.cells[i].vertices()) {
      double best = 1e300;
      for (const auto& q : b.diagram.cells[i].vertices()) best = std::min(best, (R * v + t - q).norm());
      motion_error = std::max(motion_error, best);
    }
  }
  ok = ok && motion_error < 1e-9;

  char buf[160];
  std::snprintf(buf, sizeof buf, " orders, diamonds, free action, fd error %.1e, rigid motion %.1e", fd_error,
                motion_error);
  detail = buf;
  return ok;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<bool(std::string&)>> criteria[] = {
      {"cell counts", cell_counts},
      {"hexagon complex", hexagon_complex},
      {"binomial incidences", incidence},
      {"coordinate round trip", roundtrip},
      {"gcd table", gcd_table},
      {"obstruction classification", classification},
      {"coboundary on the complex", coboundary_on_complex},
      {"equal-area weights", equal_area_weights},
      {"equal area and perimeter", equal_area_and_perimeter},
      {"property suites", property_suites},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, check] : criteria) {
    ++k;
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail += std::string(" threw: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s:%s\n", ok ? "PASS" : "FAIL", k, name, detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
