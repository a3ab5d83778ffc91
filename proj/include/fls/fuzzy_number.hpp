// Fuzzy numbers with monotone envelopes: triangular closed form and
// piecewise-linear sampled parametric form.
//
// A fuzzy number is described by a nondecreasing lower envelope lower(r) and a
// nonincreasing upper envelope upper(r) for the parameter r in [0, 1]. The
// support is [lower(0), upper(0)] and the core is [lower(1), upper(1)].

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fls/matrix.hpp"

namespace fls {

enum class FuzzyKind { Triangular, PiecewiseLinear };

class FuzzyNumber {
 public:
  /// Triangular fuzzy number (l, m, r): support [l, r], core {m}.
  static FuzzyNumber triangular(double l, double m, double r);

  /// Sampled parametric fuzzy number. The grid must be strictly increasing
  /// from exactly 0 to exactly 1; envelope values between grid points are
  /// linearly interpolated. Monotonicity violations up to 1e-12 are clamped.
  static FuzzyNumber piecewise_linear(Vec grid, Vec lower, Vec upper);

  /// Samples closed-form envelopes onto a uniform grid of `points` values.
  template <class LowerFn, class UpperFn>
  static FuzzyNumber sampled(LowerFn&& lower_fn, UpperFn&& upper_fn,
                             std::size_t points = 1001) {
    Vec grid(points), lo(points), up(points);
    for (std::size_t j = 0; j < points; ++j) {
      const double r = (points == 1) ? 1.0
                                     : static_cast<double>(j) /
                                           static_cast<double>(points - 1);
      grid[j] = r;
      lo[j] = lower_fn(r);
      up[j] = upper_fn(r);
    }
    grid.front() = 0.0;
    grid.back() = 1.0;
    return piecewise_linear(std::move(grid), std::move(lo), std::move(up));
  }

  FuzzyKind kind() const { return kind_; }

  double lower(double r) const;
  double upper(double r) const;

  std::pair<double, double> support() const { return {lower(0.0), upper(0.0)}; }
  std::pair<double, double> core() const { return {lower(1.0), upper(1.0)}; }

  /// Membership of the crisp value z. Total on R, range [0, 1]. On a flat
  /// envelope segment the inverse takes the largest parameter of the flat
  /// region.
  double membership(double z) const;

  /// [lower(alpha), upper(alpha)]. Throws DomainViolation outside [0, 1].
  std::pair<double, double> alpha_interval(double alpha) const;

  /// Envelopes translated by `offset` (same shape, shifted along the axis).
  FuzzyNumber shifted(double offset) const;

  // Triangular accessors (valid only when kind() == Triangular).
  double tri_l() const { return l_; }
  double tri_m() const { return m_; }
  double tri_r() const { return r_; }

  // Sampled accessors (valid only when kind() == PiecewiseLinear).
  const Vec& grid() const { return grid_; }
  const Vec& lower_samples() const { return lower_; }
  const Vec& upper_samples() const { return upper_; }

 private:
  FuzzyNumber() = default;

  FuzzyKind kind_ = FuzzyKind::Triangular;
  double l_ = 0.0, m_ = 0.0, r_ = 0.0;
  Vec grid_, lower_, upper_;
};

/// The crisp representative of the core used as b_cr: the modal value m for a
/// triangular number, the midpoint of [lower(1), upper(1)] otherwise.
double core_representative(const FuzzyNumber& f);

}  // namespace fls
