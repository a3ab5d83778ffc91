// Arbitrary-rank systems: the fuzzy particular set is the band-intersection
// polytope of the leading-variable system L y = B (all m rows, k unknowns)
// lifted with zeros in the free slots; the homogeneous part is the crisp
// null-space of A. The full solution is their Minkowski sum.

#pragma once

#include <vector>

#include "fls/over.hpp"
#include "fls/system.hpp"

namespace fls {

struct GeneralSolution {
  std::size_t rank = 0;
  std::vector<std::size_t> col_perm;
  std::vector<std::size_t> leading_cols;
  FuzzySystem reduced;                  // L y = B over the leading variables
  PolytopeSolution particular;          // alpha = 0 cut in leading coordinates
  std::vector<Vec> particular_vertices; // lifted to R^n, zeros in free slots
  std::vector<Vec> null_basis;          // n - k vectors, original order
};

/// Throws Inconsistent when the band intersection of L y = B is empty.
GeneralSolution solve_general(const FuzzySystem& sys, double tol = 1e-10);

/// Direct minimum over all m rows of the residual memberships.
double membership_general(const FuzzySystem& sys, const Vec& x);

/// Lifts a leading-coordinate vector into R^n with zeros in the free slots.
Vec lift_leading(const GeneralSolution& sol, const Vec& y);

/// Geometric alpha-cut region test: strip the null-space contribution read
/// off the free coordinates, then test the leading part against the reduced
/// system's bands.
bool general_contains(const GeneralSolution& sol, const Vec& x, double alpha,
                      double tol = 1e-9);

}  // namespace fls
