#include "fls/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "fls/errors.hpp"

namespace fls {

namespace {
constexpr double kBoundaryBand = 1e-7;
}

double direct_membership(const FuzzySystem& sys, const Vec& x) {
  if (x.size() != sys.unknowns()) {
    throw DimensionMismatch("direct_membership: point dimension mismatch");
  }
  const Vec residual = sys.A.apply(x);
  double mu = 1.0;
  for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
    mu = std::min(mu, sys.rhs[i].membership(residual[i]));
  }
  return mu;
}

OracleReport grid_compare(const FuzzySystem& sys,
                          const std::function<bool(const Vec&)>& region_test,
                          const std::vector<std::pair<double, double>>& bbox,
                          std::size_t resolution, double alpha) {
  const std::size_t n = bbox.size();
  if (n > 4) throw DimensionCap("grid_compare: dimension capped at 4");
  if (n != sys.unknowns()) {
    throw DimensionMismatch("grid_compare: bbox dimension mismatch");
  }
  if (resolution < 2) throw DomainViolation("grid_compare: resolution must be >= 2");

  std::vector<std::pair<double, double>> cuts;
  for (const FuzzyNumber& f : sys.rhs) cuts.push_back(f.alpha_interval(alpha));

  OracleReport report;
  std::vector<std::size_t> idx(n, 0);
  Vec x(n);
  while (true) {
    for (std::size_t d = 0; d < n; ++d) {
      const auto [lo, hi] = bbox[d];
      x[d] = lo + (hi - lo) * static_cast<double>(idx[d]) /
                      static_cast<double>(resolution - 1);
    }

    const Vec residual = sys.A.apply(x);
    bool near_boundary = false;
    bool in_cut = true;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const auto [lo, hi] = cuts[i];
      if (std::fabs(residual[i] - lo) <= kBoundaryBand ||
          std::fabs(residual[i] - hi) <= kBoundaryBand) {
        near_boundary = true;
        break;
      }
      if (residual[i] < lo || residual[i] > hi) in_cut = false;
    }

    if (!near_boundary) {
      ++report.samples;
      if (in_cut != region_test(x)) {
        ++report.disagreements;
        const double gap = std::fabs(direct_membership(sys, x) - alpha);
        if (gap >= report.max_membership_gap) {
          report.max_membership_gap = gap;
          report.worst_point = x;
        }
      }
    }

    std::size_t d = 0;
    while (d < n && ++idx[d] == resolution) {
      idx[d] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return report;
}

}  // namespace fls
