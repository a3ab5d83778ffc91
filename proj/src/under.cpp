#include "fls/under.hpp"

#include <algorithm>
#include <cmath>

#include "fls/errors.hpp"
#include "fls/rank.hpp"

namespace fls {

UnderdeterminedSolution solve_under(const FuzzySystem& sys) {
  validate(sys);
  const std::size_t m = sys.A.rows(), n = sys.A.cols();
  if (m >= n) throw DimensionMismatch("solve_under: expects fewer equations than unknowns");
  const RankPartition rp = rank_partition(sys.A);
  if (rp.k < m) throw RankDeficient("solve_under: matrix is not of full row rank");

  UnderdeterminedSolution sol;
  sol.col_perm = rp.col_perm;
  sol.leading_cols = rp.leading_cols();

  // Square leading-variable system in natural row order.
  std::vector<std::size_t> all_rows(m);
  for (std::size_t i = 0; i < m; ++i) all_rows[i] = i;
  sol.reduced = FuzzySystem{sys.A.submatrix(all_rows, sol.leading_cols), sys.rhs};

  const Parallelepiped box = solve_square(sol.reduced);

  auto lift = [&](const Vec& y) {
    Vec x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) x[sol.leading_cols[i]] = y[i];
    return x;
  };
  sol.box.center = lift(box.center);
  for (const Vec& g : box.generators) sol.box.generators.push_back(lift(g));
  sol.box.coeff_bounds = box.coeff_bounds;

  sol.null_basis = null_space_basis(sys.A, rp);
  return sol;
}

double membership_under(const UnderdeterminedSolution& sol,
                        const FuzzySystem& sys, const Vec& x) {
  (void)sol;
  const Vec residual = sys.A.apply(x);
  double mu = 1.0;
  for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
    mu = std::min(mu, sys.rhs[i].membership(residual[i]));
  }
  return mu;
}

bool under_contains(const UnderdeterminedSolution& sol, const Vec& x,
                    double alpha, double tol) {
  // The null basis has an identity block in the free slots, so the free
  // coordinates of x are exactly the null-space parameters.
  Vec stripped = x;
  const auto free = std::vector<std::size_t>(sol.col_perm.begin() +
                                                 static_cast<long>(sol.leading_cols.size()),
                                             sol.col_perm.end());
  for (std::size_t j = 0; j < free.size(); ++j) {
    const double s = x[free[j]];
    if (s == 0.0) continue;
    for (std::size_t i = 0; i < stripped.size(); ++i) {
      stripped[i] -= s * sol.null_basis[j][i];
    }
  }
  Vec y(sol.leading_cols.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = stripped[sol.leading_cols[i]];
  const Vec residual = sol.reduced.A.apply(y);
  for (std::size_t i = 0; i < sol.reduced.rhs.size(); ++i) {
    const auto [lo, hi] = sol.reduced.rhs[i].alpha_interval(alpha);
    const double slack = tol * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    if (residual[i] < lo - slack || residual[i] > hi + slack) return false;
  }
  return true;
}

}  // namespace fls
