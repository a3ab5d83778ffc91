#include "fls/square.hpp"

#include <algorithm>

#include "fls/errors.hpp"
#include "fls/rank.hpp"

namespace fls {

Parallelepiped solve_square(const FuzzySystem& sys) {
  validate(sys);
  if (sys.A.rows() != sys.A.cols()) {
    throw NotSquare("solve_square: system matrix must be square");
  }
  const std::size_t n = sys.A.cols();
  const Matrix inv = invert(sys.A);  // throws SingularMatrix
  const Vec b_cr = sys.crisp_rhs();

  Parallelepiped sol;
  sol.center = inv.apply(b_cr);
  sol.generators.reserve(n);
  sol.coeff_bounds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.generators.push_back(inv.col(i));
    sol.coeff_bounds.push_back(sys.rhs[i].shifted(-b_cr[i]));
  }
  return sol;
}

AlphaBox alpha_cut_box(const Parallelepiped& sol, double alpha) {
  AlphaBox box;
  box.center = sol.center;
  box.generators = sol.generators;
  box.intervals.reserve(sol.coeff_bounds.size());
  for (const FuzzyNumber& f : sol.coeff_bounds) {
    box.intervals.push_back(f.alpha_interval(alpha));
  }
  return box;
}

double membership_box(const Parallelepiped& sol, const FuzzySystem& sys,
                      const Vec& x) {
  const Vec residual = sys.A.apply(x);
  const Vec b_cr = sys.crisp_rhs();
  double mu = 1.0;
  for (std::size_t i = 0; i < sol.coeff_bounds.size(); ++i) {
    mu = std::min(mu, sol.coeff_bounds[i].membership(residual[i] - b_cr[i]));
  }
  return mu;
}

}  // namespace fls
