// Underdetermined full-rank systems (n > m): a fuzzy parallelepiped in the
// leading variables translated along the crisp null-space directions.

#pragma once

#include <vector>

#include "fls/square.hpp"
#include "fls/system.hpp"

namespace fls {

struct UnderdeterminedSolution {
  Parallelepiped box;            // lifted to R^n, zeros in the free slots
  std::vector<Vec> null_basis;   // n - m vectors, original variable order
  std::vector<std::size_t> col_perm;
  FuzzySystem reduced;           // the square leading-variable system K y = B
  std::vector<std::size_t> leading_cols;
};

/// Throws RankDeficient when rank(A) < m (the general solver handles that).
UnderdeterminedSolution solve_under(const FuzzySystem& sys);

/// Membership of x; translation along null vectors leaves A x unchanged, so
/// the row residuals are evaluated directly.
double membership_under(const UnderdeterminedSolution& sol,
                        const FuzzySystem& sys, const Vec& x);

/// Geometric alpha-cut region test: strip the null-space contribution read
/// off the free coordinates, then check the leading part against the reduced
/// system's alpha intervals.
bool under_contains(const UnderdeterminedSolution& sol, const Vec& x,
                    double alpha, double tol = 1e-9);

}  // namespace fls
