// Dense row-major matrices and small vector helpers.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fls {

using Vec = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  /// Largest absolute entry; 0 for an empty matrix.
  double max_abs() const;

  Vec apply(const Vec& x) const;  // A * x
  Matrix multiply(const Matrix& other) const;

  /// Submatrix picked by explicit row/column index lists (in the given order).
  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(const Vec& a, const Vec& b);
double max_abs(const Vec& v);
double distance(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);

}  // namespace fls
