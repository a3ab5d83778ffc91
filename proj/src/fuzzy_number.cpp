#include "fls/fuzzy_number.hpp"

#include <cmath>
#include <string>

#include "fls/errors.hpp"

namespace fls {

namespace {

constexpr double kClampTol = 1e-12;

void check_finite(const Vec& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw GridViolation(std::string(what) + " contains a non-finite value");
    }
  }
}

// Linear interpolation of samples over the grid at parameter r.
double interp(const Vec& grid, const Vec& vals, double r) {
  if (r <= grid.front()) return vals.front();
  if (r >= grid.back()) return vals.back();
  std::size_t lo = 0, hi = grid.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (grid[mid] <= r ? lo : hi) = mid;
  }
  const double t = (r - grid[lo]) / (grid[lo + 1] - grid[lo]);
  return vals[lo] + t * (vals[lo + 1] - vals[lo]);
}

}  // namespace

FuzzyNumber FuzzyNumber::triangular(double l, double m, double r) {
  if (!(std::isfinite(l) && std::isfinite(m) && std::isfinite(r))) {
    throw OrderViolation("triangular bounds must be finite");
  }
  if (l > m || m > r) {
    throw OrderViolation("triangular bounds must satisfy l <= m <= r");
  }
  FuzzyNumber f;
  f.kind_ = FuzzyKind::Triangular;
  f.l_ = l;
  f.m_ = m;
  f.r_ = r;
  return f;
}

FuzzyNumber FuzzyNumber::piecewise_linear(Vec grid, Vec lower, Vec upper) {
  if (grid.size() < 2 || grid.size() != lower.size() ||
      grid.size() != upper.size()) {
    throw GridViolation("grid/lower/upper must have equal length >= 2");
  }
  check_finite(grid, "grid");
  check_finite(lower, "lower");
  check_finite(upper, "upper");
  if (grid.front() != 0.0 || grid.back() != 1.0) {
    throw GridViolation("grid must run from exactly 0 to exactly 1");
  }
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (grid[j] <= grid[j - 1]) {
      throw GridViolation("grid must be strictly increasing");
    }
  }
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (lower[j] < lower[j - 1]) {
      if (lower[j - 1] - lower[j] > kClampTol) {
        throw MonotonicityViolation("lower envelope must be nondecreasing (index " +
                                    std::to_string(j) + ")");
      }
      lower[j] = lower[j - 1];
    }
    if (upper[j] > upper[j - 1]) {
      if (upper[j] - upper[j - 1] > kClampTol) {
        throw MonotonicityViolation("upper envelope must be nonincreasing (index " +
                                    std::to_string(j) + ")");
      }
      upper[j] = upper[j - 1];
    }
  }
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (lower[j] > upper[j]) {
      if (lower[j] - upper[j] > kClampTol) {
        throw MonotonicityViolation("lower envelope exceeds upper envelope (index " +
                                    std::to_string(j) + ")");
      }
      lower[j] = upper[j];
    }
  }
  FuzzyNumber f;
  f.kind_ = FuzzyKind::PiecewiseLinear;
  f.grid_ = std::move(grid);
  f.lower_ = std::move(lower);
  f.upper_ = std::move(upper);
  return f;
}

double FuzzyNumber::lower(double r) const {
  if (kind_ == FuzzyKind::Triangular) return l_ + r * (m_ - l_);
  return interp(grid_, lower_, r);
}

double FuzzyNumber::upper(double r) const {
  if (kind_ == FuzzyKind::Triangular) return r_ - r * (r_ - m_);
  return interp(grid_, upper_, r);
}

double FuzzyNumber::membership(double z) const {
  if (kind_ == FuzzyKind::Triangular) {
    if (z < l_ || z > r_) return 0.0;
    if (z < m_) return (z - l_) / (m_ - l_);
    if (z > m_) return (r_ - z) / (r_ - m_);
    return 1.0;
  }
  const double core_lo = lower_.back(), core_hi = upper_.back();
  if (z >= core_lo && z <= core_hi) return 1.0;
  if (z > core_hi) {
    if (z > upper_.front()) return 0.0;
    // Largest grid index with upper >= z (upper is nonincreasing); the
    // crossing lies inside the following segment. This choice realizes the
    // supremum rule on flat segments.
    std::size_t lo = 0, hi = grid_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (upper_[mid] >= z ? lo : hi) = mid;
    }
    if (upper_[lo] == z) return grid_[lo];
    return grid_[lo] + (grid_[hi] - grid_[lo]) * (upper_[lo] - z) /
                           (upper_[lo] - upper_[hi]);
  }
  // z < core_lo
  if (z < lower_.front()) return 0.0;
  std::size_t lo = 0, hi = grid_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (lower_[mid] <= z ? lo : hi) = mid;
  }
  if (lower_[lo] == z) return grid_[lo];
  return grid_[lo] + (grid_[hi] - grid_[lo]) * (z - lower_[lo]) /
                         (lower_[hi] - lower_[lo]);
}

std::pair<double, double> FuzzyNumber::alpha_interval(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainViolation("alpha must lie in [0, 1]");
  }
  return {lower(alpha), upper(alpha)};
}

FuzzyNumber FuzzyNumber::shifted(double offset) const {
  FuzzyNumber f(*this);
  if (kind_ == FuzzyKind::Triangular) {
    f.l_ += offset;
    f.m_ += offset;
    f.r_ += offset;
  } else {
    for (double& v : f.lower_) v += offset;
    for (double& v : f.upper_) v += offset;
  }
  return f;
}

double core_representative(const FuzzyNumber& f) {
  if (f.kind() == FuzzyKind::Triangular) return f.tri_m();
  const auto [lo, hi] = f.core();
  return 0.5 * (lo + hi);
}

}  // namespace fls
