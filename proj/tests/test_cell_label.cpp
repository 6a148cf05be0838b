#include <doctest.h>

#include "confspace/cell_label.hpp"

using namespace confspace;

namespace {

CellLabel L(const char* text, int d) { return parse_label(text, d); }

}  // namespace

TEST_CASE("parsing and formatting") {
  const CellLabel a = L("3<2 8<1 1<2 4<1 7<1 6<2 5<2 2", 2);
  CHECK(a.n() == 8);
  CHECK(a.sigma() == std::vector<int>{3, 8, 1, 4, 7, 6, 5, 2});
  CHECK(a.seps() == std::vector<int>{2, 1, 2, 1, 1, 2, 2});
  CHECK(format_label(a) == "3<2 8<1 1<2 4<1 7<1 6<2 5<2 2");

  SUBCASE("bar shorthand") {
    const CellLabel b = L("13|2", 2);
    CHECK(b == L("1<2 3<1 2", 2));
    CHECK(format_bar_label(b) == "13|2");
    CHECK(format_bar_label(L("1|2|3", 2)) == "1|2|3");
    CHECK(format_bar_label(L("123", 2)) == "123");
    CHECK_THROWS_AS(parse_label("13|2", 3), InvalidLabel);
    CHECK_THROWS_AS(parse_label("1||2", 2), InvalidLabel);
    CHECK_THROWS_AS(parse_label("12|", 2), InvalidLabel);
  }

  SUBCASE("malformed strings") {
    CHECK_THROWS_AS(parse_label("1<2", 2), InvalidLabel);
    CHECK_THROWS_AS(parse_label("1<2 2 3", 2), InvalidLabel);
    CHECK_THROWS_AS(parse_label("1<x 2", 2), InvalidLabel);
  }
}

TEST_CASE("label validation") {
  CHECK_THROWS_AS(CellLabel(2, {1, 1, 2}, {1, 1}), InvalidLabel);
  CHECK_THROWS_AS(CellLabel(2, {1, 2, 4}, {1, 1}), InvalidLabel);
  CHECK_THROWS_AS(CellLabel(2, {1, 2, 3}, {1}), InvalidLabel);
  CHECK_THROWS_AS(CellLabel(2, {1, 2, 3}, {0, 1}), InvalidLabel);
  CHECK_THROWS_AS(CellLabel(2, {1, 2, 3}, {4, 1}), InvalidLabel);
  // coincident points must be listed in ascending order
  CHECK_THROWS_AS(CellLabel(2, {2, 1, 3}, {3, 1}), InvalidLabel);
  CHECK_NOTHROW(CellLabel(2, {1, 2, 3}, {3, 1}));

  const CellLabel strat(2, {1, 2, 3}, {3, 1});
  CHECK(strat.is_valid(ComplexKind::stratification));
  CHECK_FALSE(strat.is_valid(ComplexKind::complement));
  CHECK_THROWS_AS(cell_dimension(strat), InvalidLabel);
}

TEST_CASE("stratum_dimension") {
  CHECK(stratum_dimension(L("3<2 8<1 1<2 4<1 7<1 6<2 5<2 2", 2)) == 10);
  CHECK(stratum_dimension(L("3<2 1<2 8<2 4<1 7<1 6<2 5<2 2", 2)) == 9);
  for (int d = 1; d <= 4; ++d) {
    for (int n = 2; n <= 6; ++n) {
      std::vector<int> sigma(n);
      for (int k = 0; k < n; ++k) sigma[k] = k + 1;
      const CellLabel origin(d, sigma, std::vector<int>(n - 1, d + 1));
      CHECK(stratum_dimension(origin) == 0);
    }
  }
}

TEST_CASE("cell_dimension") {
  CHECK(cell_dimension(L("1<2 2<2 3", 2)) == 2);
  CHECK(cell_dimension(L("1<1 2<1 3", 2)) == 0);
  CHECK(cell_dimension(L("1<2 3<1 2", 2)) == 1);
  CHECK(cell_dimension(L("2<3 1<3 4<2 3", 3)) == top_dimension(3, 4) - 1);
}

TEST_CASE("separator_min") {
  const CellLabel a = L("1<2 3<1 2", 2);
  CHECK(separator_min(a, 1, 2) == SeparatorMin{Order::before, 1});
  CHECK(separator_min(a, 1, 3) == SeparatorMin{Order::before, 2});
  CHECK(separator_min(a, 2, 1) == SeparatorMin{Order::after, 1});
  const CellLabel b = L("3<2 8<1 1<2 4<1 7<1 6<2 5<2 2", 2);
  CHECK(separator_min(b, 3, 2) == SeparatorMin{Order::before, 1});
  CHECK(separator_min(b, 5, 2) == SeparatorMin{Order::before, 2});
  CHECK_THROWS(separator_min(b, 4, 4));
}

TEST_CASE("relation table agrees with separator_min") {
  const CellLabel b = L("3<2 8<1 1<2 4<1 7<1 6<2 5<2 2", 2);
  const auto table = relation_table(b);
  for (int a = 1; a <= 8; ++a) {
    for (int c = 1; c <= 8; ++c) {
      if (a == c) continue;
      const auto s = separator_min(b, a, c);
      CHECK(table[(a - 1) * 8 + (c - 1)] == (s.order == Order::before ? s.index : -s.index));
    }
  }
}

TEST_CASE("is_face_stratification") {
  const CellLabel coarse = L("3<2 8<1 1<2 4<1 7<1 6<2 5<2 2", 2);
  const CellLabel fine = L("3<2 1<2 8<2 4<1 7<1 6<2 5<2 2", 2);
  CHECK(is_face_stratification(coarse, fine));
  CHECK_FALSE(is_face_stratification(fine, coarse));
  CHECK(is_face_stratification(coarse, coarse));
  CHECK_FALSE(is_face_stratification(L("1<1 2<1 3", 1), L("2<1 1<1 3", 1)));
  // the origin lies in the closure of every stratum
  CHECK(is_face_stratification(coarse, CellLabel(2, {1, 2, 3, 4, 5, 6, 7, 8}, std::vector<int>(7, 3))));
  CHECK_THROWS(is_face_stratification(coarse, L("1<1 2<1 3", 2)));
}

TEST_CASE("is_face_complement") {
  CHECK(is_face_complement(L("13|2", 2), L("123", 2)));
  CHECK(is_face_complement(L("1|2|3", 2), L("123", 2)));
  CHECK_FALSE(is_face_complement(L("3|12", 2), L("3|21", 2)));
  CHECK_FALSE(is_face_complement(L("123", 2), L("13|2", 2)));
  CHECK_THROWS_AS(is_face_complement(CellLabel(2, {1, 2, 3}, {3, 1}), L("123", 2)), InvalidLabel);
}

TEST_CASE("group_action") {
  const CellLabel c = L("1<2 2<2 3", 2);
  CHECK(group_action({2, 1, 3}, c) == L("2<2 1<2 3", 2));
  CHECK(group_action({1, 2, 3}, c) == c);
  CHECK_THROWS(group_action({1, 1, 3}, c));
  CHECK_THROWS(group_action({1, 2}, c));

  std::vector<int> pi = {1, 2, 3};
  std::vector<CellLabel> orbit;
  do {
    orbit.push_back(group_action(pi, L("13|2", 2)));
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::sort(orbit.begin(), orbit.end());
  CHECK(std::unique(orbit.begin(), orbit.end()) == orbit.end());
  CHECK(orbit.size() == 6);
}

TEST_CASE("ridge_orbit_index") {
  CHECK(ridge_orbit_index(L("1<1 2<2 3", 2)) == 1);
  CHECK(ridge_orbit_index(L("1<2 3<1 2", 2)) == 2);
  CHECK(ridge_orbit_index(L("2<3 1<3 4<2 3", 3)) == 3);
  CHECK_THROWS_AS(ridge_orbit_index(L("123", 2)), InvalidLabel);
  CHECK_THROWS_AS(ridge_orbit_index(L("1|2|3", 2)), InvalidLabel);
  CHECK_THROWS_AS(ridge_orbit_index(L("1<1 2<3 3", 3)), InvalidLabel);
}
