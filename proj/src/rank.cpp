#include "fls/rank.hpp"

#include <algorithm>
#include <cmath>

#include "fls/errors.hpp"

namespace fls {

namespace {

// Ascending leading indices first, then the ascending rest.
std::vector<std::size_t> canonical_perm(std::vector<std::size_t> leading,
                                        std::size_t total) {
  std::sort(leading.begin(), leading.end());
  std::vector<bool> used(total, false);
  for (std::size_t i : leading) used[i] = true;
  std::vector<std::size_t> perm = leading;
  for (std::size_t i = 0; i < total; ++i) {
    if (!used[i]) perm.push_back(i);
  }
  return perm;
}

}  // namespace

RankPartition rank_partition(const Matrix& A, double tol) {
  if (!(tol > 0.0)) throw DomainViolation("rank tolerance must be positive");
  const std::size_t m = A.rows(), n = A.cols();
  const double scale = A.max_abs();
  const double thresh = tol * scale;

  Matrix W = A;
  std::vector<bool> row_used(m, false);
  std::vector<std::size_t> pivot_rows, pivot_cols;

  if (scale > 0.0) {
    for (std::size_t col = 0; col < n && pivot_rows.size() < m; ++col) {
      std::size_t best_row = m;
      double best = thresh;
      for (std::size_t r = 0; r < m; ++r) {
        if (row_used[r]) continue;
        const double v = std::fabs(W(r, col));
        if (v > best) {
          best = v;
          best_row = r;
        }
      }
      if (best_row == m) continue;  // column dependent on earlier pivots
      row_used[best_row] = true;
      pivot_rows.push_back(best_row);
      pivot_cols.push_back(col);
      const double p = W(best_row, col);
      for (std::size_t r = 0; r < m; ++r) {
        if (row_used[r]) continue;
        const double factor = W(r, col) / p;
        if (factor == 0.0) continue;
        for (std::size_t c = col; c < n; ++c) W(r, c) -= factor * W(best_row, c);
      }
    }
  }

  RankPartition rp;
  rp.k = pivot_rows.size();
  rp.row_perm = canonical_perm(pivot_rows, m);
  rp.col_perm = canonical_perm(pivot_cols, n);

  const std::vector<std::size_t> lr(rp.row_perm.begin(),
                                    rp.row_perm.begin() + static_cast<long>(rp.k));
  const std::vector<std::size_t> dr(rp.row_perm.begin() + static_cast<long>(rp.k),
                                    rp.row_perm.end());
  const std::vector<std::size_t> lc(rp.col_perm.begin(),
                                    rp.col_perm.begin() + static_cast<long>(rp.k));
  const std::vector<std::size_t> fc(rp.col_perm.begin() + static_cast<long>(rp.k),
                                    rp.col_perm.end());
  rp.K = A.submatrix(lr, lc);
  rp.G = A.submatrix(lr, fc);
  rp.M = A.submatrix(dr, lc);
  rp.H = A.submatrix(dr, fc);
  rp.L = A.submatrix(rp.row_perm, lc);
  rp.R = A.submatrix(rp.row_perm, fc);
  return rp;
}

Matrix invert(const Matrix& K, double tol) {
  if (K.rows() != K.cols()) throw NotSquare("invert: matrix is not square");
  const std::size_t n = K.rows();
  const double thresh = tol * std::max(K.max_abs(), 1e-300);
  Matrix W = K;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best_row = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(W(r, col)) > std::fabs(W(best_row, col))) best_row = r;
    }
    if (std::fabs(W(best_row, col)) <= thresh) {
      throw SingularMatrix("invert: pivot below tolerance");
    }
    if (best_row != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(W(col, c), W(best_row, c));
        std::swap(inv(col, c), inv(best_row, c));
      }
    }
    const double p = W(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      W(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = W(r, col);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        W(r, c) -= factor * W(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

bool solve_dense(Matrix A, Vec b, Vec& x, double tol) {
  const std::size_t n = A.rows();
  if (A.cols() != n || b.size() != n) {
    throw DimensionMismatch("solve_dense: square system expected");
  }
  const double thresh = tol * std::max(A.max_abs(), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best_row = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(A(r, col)) > std::fabs(A(best_row, col))) best_row = r;
    }
    if (std::fabs(A(best_row, col)) <= thresh) return false;
    if (best_row != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(A(col, c), A(best_row, c));
      std::swap(b[col], b[best_row]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = A(r, col) / A(col, col);
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) A(r, c) -= factor * A(col, c);
      b[r] -= factor * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
    x[i] = s / A(i, i);
  }
  return true;
}

std::vector<Vec> null_space_basis(const Matrix& A, const RankPartition& rp,
                                  double tol) {
  const std::size_t n = A.cols();
  const auto leading = rp.leading_cols();
  const auto free = rp.free_cols();
  std::vector<Vec> basis;
  if (free.empty()) return basis;
  if (rp.k == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n, 0.0);
      v[j] = 1.0;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Matrix Kinv = invert(rp.K, tol);
  const Matrix N = Kinv.multiply(rp.G);  // k x (n-k)
  for (std::size_t j = 0; j < free.size(); ++j) {
    Vec v(n, 0.0);
    for (std::size_t i = 0; i < rp.k; ++i) v[leading[i]] = -N(i, j);
    v[free[j]] = 1.0;
    basis.push_back(std::move(v));
  }
  return basis;
}

CrispGeneralSolution solve_crisp_general(const Matrix& A, const Vec& b,
                                         double tol) {
  if (b.size() != A.rows()) {
    throw DimensionMismatch("solve_crisp_general: rhs length mismatch");
  }
  const RankPartition rp = rank_partition(A, tol);

  // Consistency: augmenting with b must not raise the rank.
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  if (rank_partition(aug, tol).k > rp.k) {
    throw Inconsistent("solve_crisp_general: system has no solution");
  }

  CrispGeneralSolution sol;
  sol.col_perm = rp.col_perm;
  sol.particular.assign(A.cols(), 0.0);
  if (rp.k > 0) {
    const auto lead_rows = rp.leading_rows();
    Vec b_lead(rp.k);
    for (std::size_t i = 0; i < rp.k; ++i) b_lead[i] = b[lead_rows[i]];
    Vec y;
    if (!solve_dense(rp.K, b_lead, y, tol)) {
      throw SingularMatrix("solve_crisp_general: K not invertible at tolerance");
    }
    const auto lead_cols = rp.leading_cols();
    for (std::size_t i = 0; i < rp.k; ++i) sol.particular[lead_cols[i]] = y[i];
  }
  sol.null_basis = null_space_basis(A, rp, tol);
  return sol;
}

}  // namespace fls
