// Square full-rank systems: the right-hand-side box mapped through A^-1 is a
// parallelepiped; membership comes from the coefficient coordinates.

#pragma once

#include <utility>
#include <vector>

#include "fls/system.hpp"

namespace fls {

struct Parallelepiped {
  Vec center;                          // x_cr = A^-1 b_cr
  std::vector<Vec> generators;         // columns of A^-1
  std::vector<FuzzyNumber> coeff_bounds;  // rhs_i shifted by -(b_cr)_i, core at 0
};

struct AlphaBox {
  Vec center;
  std::vector<Vec> generators;
  std::vector<std::pair<double, double>> intervals;  // per-generator c_i range
};

/// Throws NotSquare / SingularMatrix.
Parallelepiped solve_square(const FuzzySystem& sys);

/// Coefficient intervals of the alpha-cut box. Throws DomainViolation.
AlphaBox alpha_cut_box(const Parallelepiped& sol, double alpha);

/// Membership of x: coefficients are recovered as c = A x - b_cr and each is
/// graded by its coefficient bound; the minimum wins.
double membership_box(const Parallelepiped& sol, const FuzzySystem& sys,
                      const Vec& x);

}  // namespace fls
