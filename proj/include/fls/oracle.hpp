// Independent verification: direct residual-based membership and a grid
// sampling harness comparing it against a solver's geometric region test.
// The oracle recomputes residuals from scratch and never touches the
// geometric structures it checks.

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "fls/system.hpp"

namespace fls {

struct OracleReport {
  std::size_t samples = 0;
  std::size_t disagreements = 0;
  double max_membership_gap = 0.0;
  Vec worst_point;
};

/// Minimum over rows of the membership of the row residual in its fuzzy
/// right-hand side. Throws DimensionMismatch.
double direct_membership(const FuzzySystem& sys, const Vec& x);

/// Samples a uniform grid over bbox and compares direct alpha-cut membership
/// (all residuals inside their alpha intervals) against the region test.
/// Points within 1e-7 of any band boundary are skipped. Throws DimensionCap
/// when the dimension exceeds 4.
OracleReport grid_compare(const FuzzySystem& sys,
                          const std::function<bool(const Vec&)>& region_test,
                          const std::vector<std::pair<double, double>>& bbox,
                          std::size_t resolution, double alpha);

}  // namespace fls
