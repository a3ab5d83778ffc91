// Shared fixtures for the test suites: the worked systems exercised across
// the solvers plus small random-system generators.

#pragma once

#include <cmath>
#include <random>

#include "fls/system.hpp"

namespace fls::testing {

inline FuzzyNumber tri(double l, double m, double r) {
  return FuzzyNumber::triangular(l, m, r);
}

// [[1,-2],[1,3]] x = ((-2,1,4),(2,6,10)); crisp solution (3,1)
inline FuzzySystem square_2x2() {
  return {Matrix{{1, -2}, {1, 3}}, {tri(-2, 1, 4), tri(2, 6, 10)}};
}

// [[-1,2,3],[3,4,-2]] x = ((-1,1,3),(15,17,20)); lifted center (3,2,0)
inline FuzzySystem under_2x3() {
  return {Matrix{{-1, 2, 3}, {3, 4, -2}}, {tri(-1, 1, 3), tri(15, 17, 20)}};
}

// Three bands in the plane meeting in a hexagon.
inline FuzzySystem over_3x2() {
  return {Matrix{{-1, 2}, {3, 4}, {2, -1}},
          {tri(-1, 1, 3), tri(15, 17, 20), tri(2, 3, 6)}};
}

// over_3x2 with the third band flipped out of reach: empty intersection.
inline FuzzySystem over_3x2_inconsistent() {
  return {Matrix{{-1, 2}, {3, 4}, {2, -1}},
          {tri(-1, 1, 3), tri(15, 17, 20), tri(-2, -1, 0)}};
}

// The same bands with curved parametric envelopes, sampled.
inline FuzzySystem over_3x2_parametric(std::size_t points = 1001) {
  auto f1 = FuzzyNumber::sampled([](double r) { return -1.0 + r; },
                                 [](double r) { return 3.0 - 2.0 * r * r; }, points);
  auto f2 = FuzzyNumber::sampled([](double r) { return 15.0 + r * r; },
                                 [](double r) { return 20.0 - 2.0 * std::sqrt(r); },
                                 points);
  auto f3 = FuzzyNumber::sampled([](double r) { return 2.0 + r * r * r; },
                                 [](double r) { return 6.0 - 3.0 * r * r; }, points);
  return {Matrix{{-1, 2}, {3, 4}, {2, -1}}, {f1, f2, f3}};
}

// 3x4 rank-2 system whose leading 2-column subsystem is over_3x2.
inline FuzzySystem general_3x4() {
  return {Matrix{{-1, 2, -7, 5}, {3, 4, 1, -5}, {2, -1, 8, -7}},
          {tri(-1, 1, 3), tri(15, 17, 20), tri(2, 3, 6)}};
}

// Random system with the requested rank; rhs triangular around A x0 with
// spreads drawn from [0.1, 10], so x0 always has membership 1.
inline FuzzySystem random_system(std::mt19937& rng, std::size_t m, std::size_t n,
                                 std::size_t rank, Vec* x0_out = nullptr) {
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  std::uniform_real_distribution<double> spread(0.1, 10.0);
  Matrix A(m, n);
  if (rank > 0) {
    Matrix B(m, rank), C(rank, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < rank; ++j) B(i, j) = entry(rng);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < n; ++j) C(i, j) = entry(rng);
    A = B.multiply(C);
  }
  Vec x0(n);
  for (double& v : x0) v = entry(rng);
  const Vec center = A.apply(x0);
  FuzzySystem sys;
  sys.A = A;
  for (std::size_t i = 0; i < m; ++i) {
    sys.rhs.push_back(tri(center[i] - spread(rng), center[i], center[i] + spread(rng)));
  }
  if (x0_out) *x0_out = x0;
  return sys;
}

}  // namespace fls::testing
