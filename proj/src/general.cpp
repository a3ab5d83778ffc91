#include "fls/general.hpp"

#include <algorithm>
#include <cmath>

#include "fls/errors.hpp"
#include "fls/rank.hpp"

namespace fls {

GeneralSolution solve_general(const FuzzySystem& sys, double tol) {
  validate(sys);
  const std::size_t m = sys.A.rows(), n = sys.A.cols();
  const RankPartition rp = rank_partition(sys.A, tol);

  GeneralSolution sol;
  sol.rank = rp.k;
  sol.col_perm = rp.col_perm;
  sol.leading_cols = rp.leading_cols();
  sol.null_basis = null_space_basis(sys.A, rp, tol);

  if (rp.k == 0) {
    // Zero matrix: every x yields zero residuals, so the system is solvable
    // exactly when 0 lies inside every support.
    for (const FuzzyNumber& f : sys.rhs) {
      const auto [lo, hi] = f.support();
      if (lo > 0.0 || hi < 0.0) {
        throw Inconsistent("solve_general: zero matrix with nonzero support gap");
      }
    }
    sol.reduced = FuzzySystem{Matrix(m, 0), sys.rhs};
    sol.particular.alpha = 0.0;
    sol.particular_vertices.push_back(Vec(n, 0.0));
    return sol;
  }

  std::vector<std::size_t> all_rows(m);
  for (std::size_t i = 0; i < m; ++i) all_rows[i] = i;
  sol.reduced = FuzzySystem{sys.A.submatrix(all_rows, sol.leading_cols), sys.rhs};

  auto p = polytope_at_alpha(sol.reduced, 0.0);
  if (!p) {
    throw Inconsistent("solve_general: the band intersection is empty");
  }
  sol.particular = std::move(*p);
  for (const Vec& v : sol.particular.vertices) {
    sol.particular_vertices.push_back(lift_leading(sol, v));
  }
  return sol;
}

double membership_general(const FuzzySystem& sys, const Vec& x) {
  const Vec residual = sys.A.apply(x);
  double mu = 1.0;
  for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
    mu = std::min(mu, sys.rhs[i].membership(residual[i]));
  }
  return mu;
}

Vec lift_leading(const GeneralSolution& sol, const Vec& y) {
  Vec x(sol.col_perm.size(), 0.0);
  for (std::size_t i = 0; i < sol.leading_cols.size(); ++i) {
    x[sol.leading_cols[i]] = y[i];
  }
  return x;
}

bool general_contains(const GeneralSolution& sol, const Vec& x, double alpha,
                      double tol) {
  Vec stripped = x;
  const std::size_t k = sol.leading_cols.size();
  for (std::size_t j = k; j < sol.col_perm.size(); ++j) {
    const double s = x[sol.col_perm[j]];
    if (s == 0.0) continue;
    const Vec& v = sol.null_basis[j - k];
    for (std::size_t i = 0; i < stripped.size(); ++i) stripped[i] -= s * v[i];
  }
  if (k == 0) {
    // Zero matrix: all residuals vanish, so the cut contains every point
    // exactly when 0 sits inside each alpha interval.
    for (const FuzzyNumber& f : sol.reduced.rhs) {
      const auto [lo, hi] = f.alpha_interval(alpha);
      const double slack = tol * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
      if (lo - slack > 0.0 || hi + slack < 0.0) return false;
    }
    return true;
  }
  Vec y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = stripped[sol.leading_cols[i]];
  const Vec residual = sol.reduced.A.apply(y);
  for (std::size_t i = 0; i < sol.reduced.rhs.size(); ++i) {
    const auto [lo, hi] = sol.reduced.rhs[i].alpha_interval(alpha);
    const double slack = tol * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    if (residual[i] < lo - slack || residual[i] > hi + slack) return false;
  }
  return true;
}

}  // namespace fls
