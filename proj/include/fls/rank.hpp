// Rank-revealing elimination, the K/G/M/H/L/R partition, dense inversion and
// the crisp general solution.

#pragma once

#include <cstddef>
#include <vector>

#include "fls/matrix.hpp"

namespace fls {

inline constexpr double kDefaultRankTol = 1e-10;

struct RankPartition {
  std::size_t k = 0;                  // rank
  std::vector<std::size_t> row_perm;  // first k = independent rows, ascending
  std::vector<std::size_t> col_perm;  // first k = leading columns, ascending
  Matrix K;  // k x k, invertible
  Matrix G;  // k x (n-k)
  Matrix M;  // (m-k) x k
  Matrix H;  // (m-k) x (n-k)
  Matrix L;  // m x k     (row-permuted stack [K; M])
  Matrix R;  // m x (n-k) (row-permuted stack [G; H])

  std::vector<std::size_t> leading_rows() const {
    return {row_perm.begin(), row_perm.begin() + static_cast<long>(k)};
  }
  std::vector<std::size_t> leading_cols() const {
    return {col_perm.begin(), col_perm.begin() + static_cast<long>(k)};
  }
  std::vector<std::size_t> free_cols() const {
    return {col_perm.begin() + static_cast<long>(k), col_perm.end()};
  }
};

/// Rank-revealing Gaussian elimination. Columns are examined left to right
/// and within a column the largest remaining entry is taken as pivot; a pivot
/// is accepted when its magnitude exceeds tol times the largest entry of A.
/// This realizes the upper-left-K convention: whenever the leftmost columns
/// and their pivot rows are independent, K is exactly the corner submatrix of
/// the ascending-sorted independent rows/columns. A zero matrix yields k = 0
/// with empty blocks.
RankPartition rank_partition(const Matrix& A, double tol = kDefaultRankTol);

/// Inverse of a square matrix by elimination with partial pivoting.
/// Throws NotSquare / SingularMatrix.
Matrix invert(const Matrix& K, double tol = kDefaultRankTol);

/// Solves the square system A x = b in place of the caller; returns false
/// when a pivot falls below tol relative to the matrix scale.
bool solve_dense(Matrix A, Vec b, Vec& x, double tol = kDefaultRankTol);

struct CrispGeneralSolution {
  Vec particular;              // free variables set to 0, original order
  std::vector<Vec> null_basis; // one vector per free variable, original order
  std::vector<std::size_t> col_perm;
};

/// General solution of the crisp system A x = b: a particular solution with
/// free variables at zero plus a null-space basis with an identity block in
/// the free slots. Throws Inconsistent when b raises the rank.
CrispGeneralSolution solve_crisp_general(const Matrix& A, const Vec& b,
                                         double tol = kDefaultRankTol);

/// Null-space basis of A (columns of [-K^-1 G; I], permutation undone).
std::vector<Vec> null_space_basis(const Matrix& A, const RankPartition& rp,
                                  double tol = kDefaultRankTol);

}  // namespace fls
