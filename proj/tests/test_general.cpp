#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fls/errors.hpp"
#include "fls/general.hpp"
#include "fls/oracle.hpp"
#include "fls/rank.hpp"
#include "fls/square.hpp"
#include "helpers.hpp"

using namespace fls;
using fls::testing::general_3x4;
using fls::testing::square_2x2;
using fls::testing::tri;

TEST_CASE("rank-2 3x4 system: lifted hexagon plus a null plane") {
  const auto sys = general_3x4();
  const auto sol = solve_general(sys);
  CHECK(sol.rank == 2);
  CHECK(sol.leading_cols == std::vector<std::size_t>{0, 1});

  // particular vertices are the planar hexagon with trailing zeros
  REQUIRE(sol.particular_vertices.size() == 6);
  for (const Vec& v : sol.particular_vertices) {
    REQUIRE(v.size() == 4);
    CHECK(v[2] == 0.0);
    CHECK(v[3] == 0.0);
  }
  CHECK(sol.particular_vertices.front()[0] == doctest::Approx(23.0 / 11.0).epsilon(1e-9));
  CHECK(sol.particular_vertices.front()[1] == doctest::Approx(24.0 / 11.0).epsilon(1e-9));

  // null basis spans the plane of (-3,2,1,0) and (3,-1,0,1): with the
  // identity block in the free slots each target is reconstructed by its own
  // free coordinates
  REQUIRE(sol.null_basis.size() == 2);
  const std::vector<Vec> targets{{-3, 2, 1, 0}, {3, -1, 0, 1}};
  for (const Vec& t : targets) {
    Vec rebuilt(4, 0.0);
    for (std::size_t j = 0; j < 2; ++j) {
      const double s = t[2 + j];
      for (int i = 0; i < 4; ++i) rebuilt[i] += s * sol.null_basis[j][i];
    }
    for (int i = 0; i < 4; ++i) {
      CHECK(rebuilt[i] == doctest::Approx(t[i]).epsilon(1e-9));
    }
  }
  for (const Vec& v : sol.null_basis) {
    CHECK(max_abs(sys.A.apply(v)) <= 1e-9);
  }
}

TEST_CASE("membership queries on the rank-2 system") {
  const auto sys = general_3x4();
  CHECK(membership_general(sys, {9, 0.5, 0, 2}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(membership_general(sys, {3, 3, 1, 1}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(membership_general(sys, {-3, 4.5, 1, -1}) == 0.0);
}

TEST_CASE("full-rank square input reduces to the parallelepiped corners") {
  const auto sys = square_2x2();
  const auto sol = solve_general(sys);
  CHECK(sol.rank == 2);
  CHECK(sol.null_basis.empty());
  REQUIRE(sol.particular_vertices.size() == 4);

  // the corners of solve_square's parallelepiped, canonically ordered
  const auto box = solve_square(sys);
  std::vector<Vec> corners;
  for (std::size_t c = 0; c < 4; ++c) {
    Vec x = box.center;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto [lo, hi] = box.coeff_bounds[i].support();
      const double s = ((c >> i) & 1u) ? hi : lo;
      for (std::size_t d = 0; d < 2; ++d) x[d] += s * box.generators[i][d];
    }
    corners.push_back(x);
  }
  for (const Vec& corner : corners) {
    bool found = false;
    for (const Vec& v : sol.particular_vertices) {
      if (distance(v, corner) < 1e-9) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("rank-1 proportional rows") {
  const FuzzySystem sys{Matrix{{1, 2}, {2, 4}}, {tri(0, 1, 2), tri(0, 2, 4)}};
  const auto sol = solve_general(sys);
  CHECK(sol.rank == 1);
  REQUIRE(sol.null_basis.size() == 1);
  CHECK(sol.null_basis[0][0] == doctest::Approx(-2).epsilon(1e-12));
  CHECK(sol.null_basis[0][1] == 1.0);
  // bands x in [0,2] and 2x in [0,4] intersect in [0,2] for the leading var
  REQUIRE(sol.particular_vertices.size() == 2);
  CHECK(sol.particular_vertices[0][0] == doctest::Approx(0).epsilon(1e-9));
  CHECK(sol.particular_vertices[1][0] == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("incompatible dependent rows raise Inconsistent") {
  // second row is twice the first, but its fuzzy number sits elsewhere
  const FuzzySystem sys{Matrix{{1, 2}, {2, 4}}, {tri(0, 1, 2), tri(10, 11, 12)}};
  CHECK_THROWS_AS(solve_general(sys), Inconsistent);
}

TEST_CASE("zero matrix") {
  const FuzzySystem ok{Matrix(2, 2, 0.0), {tri(-1, 0, 1), tri(-2, 0, 2)}};
  const auto sol = solve_general(ok);
  CHECK(sol.rank == 0);
  CHECK(sol.null_basis.size() == 2);
  CHECK(general_contains(sol, {123.0, -7.0}, 0.0));

  const FuzzySystem bad{Matrix(2, 2, 0.0), {tri(1, 2, 3), tri(-2, 0, 2)}};
  CHECK_THROWS_AS(solve_general(bad), Inconsistent);
}

TEST_CASE("property: Minkowski sum structure") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> param(-1e3, 1e3);
  const auto sys = general_3x4();
  const auto sol = solve_general(sys);
  for (const Vec& xp : sol.particular_vertices) {
    for (int q = 0; q < 10; ++q) {
      Vec x = xp;
      for (const Vec& nv : sol.null_basis) {
        const double s = param(rng);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * nv[i];
      }
      CHECK(membership_general(sys, x) ==
            doctest::Approx(membership_general(sys, xp)).epsilon(1e-7));
    }
  }
}

TEST_CASE("property: general path agrees with the direct oracle") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 3;
    const std::size_t k = 1 + rng() % std::min(m, n);
    Vec x0;
    const auto sys = fls::testing::random_system(rng, m, n, k, &x0);
    GeneralSolution sol;
    try {
      sol = solve_general(sys);
    } catch (const Inconsistent&) {
      continue;  // possible only through tolerance corner cases
    }
    std::vector<std::pair<double, double>> bbox;
    for (double v : x0) bbox.emplace_back(v - 4.0, v + 4.0);
    for (double alpha : {0.0, 0.5}) {
      const auto report = grid_compare(
          sys, [&](const Vec& x) { return general_contains(sol, x, alpha); },
          bbox, n == 1 ? 101 : (n == 2 ? 31 : 11), alpha);
      CHECK(report.disagreements == 0);
    }
  }
}
