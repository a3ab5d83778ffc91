#include "fls/matrix.hpp"

#include <cmath>

#include "fls/errors.hpp"

namespace fls {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("matrix initializer rows have unequal lengths");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

Vec Matrix::row(std::size_t i) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

Vec Matrix::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vec out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix-matrix size mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
  Matrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("distance: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scaled(const Vec& a, double s) {
  Vec out(a);
  for (double& x : out) x *= s;
  return out;
}

}  // namespace fls
