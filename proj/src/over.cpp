#include "fls/over.hpp"

#include <algorithm>
#include <cmath>

#include "fls/errors.hpp"
#include "fls/rank.hpp"

namespace fls {

namespace {

double binomial_capped(std::size_t m, std::size_t n, double cap) {
  double v = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    v *= static_cast<double>(m - i) / static_cast<double>(i + 1);
    if (v > cap) return cap + 1.0;
  }
  return v;
}

// Calls visit(subset) for every n-combination of {0, ..., m-1}.
template <class Visit>
void for_each_combination(std::size_t m, std::size_t n, Visit&& visit) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = n;
    while (i-- > 0) {
      if (idx[i] < m - (n - i)) {
        ++idx[i];
        for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

Vec centroid(const std::vector<Vec>& pts) {
  Vec c(pts.front().size(), 0.0);
  for (const Vec& p : pts) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  }
  for (double& v : c) v /= static_cast<double>(pts.size());
  return c;
}

}  // namespace

std::vector<Halfspace> band_halfspaces(const FuzzySystem& sys, double alpha) {
  validate(sys);
  std::vector<Halfspace> hs;
  hs.reserve(2 * sys.equations());
  for (std::size_t i = 0; i < sys.equations(); ++i) {
    const auto [lo, hi] = sys.rhs[i].alpha_interval(alpha);
    const Vec a = sys.A.row(i);
    hs.push_back({a, lo, Halfspace::Sense::GreaterEq, i});
    hs.push_back({a, hi, Halfspace::Sense::LessEq, i});
  }
  return hs;
}

bool satisfies_all(const std::vector<Halfspace>& halfspaces, const Vec& x,
                   double tol) {
  for (const Halfspace& h : halfspaces) {
    const double v = dot(h.normal, x);
    const double slack = tol * (1.0 + std::fabs(h.offset));
    if (h.sense == Halfspace::Sense::GreaterEq) {
      if (v < h.offset - slack) return false;
    } else {
      if (v > h.offset + slack) return false;
    }
  }
  return true;
}

std::vector<Vec> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                    std::size_t n, double tol) {
  const std::size_t m = halfspaces.size() / 2;
  if (n < 1 || m < n) return {};
  if (n > 8 || binomial_capped(m, n, 1e6) > 1e6) {
    throw ProblemTooLarge("enumerate_vertices: combination count exceeds the cap");
  }

  std::vector<Vec> vertices;
  for_each_combination(m, n, [&](const std::vector<std::size_t>& rows) {
    Matrix S(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& a = halfspaces[2 * rows[i]].normal;
      for (std::size_t j = 0; j < n; ++j) S(i, j) = a[j];
    }
    Vec rhs(n), x;
    for (std::size_t choice = 0; choice < (1u << n); ++choice) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t side = (choice >> i) & 1u;  // 0 = lower, 1 = upper
        rhs[i] = halfspaces[2 * rows[i] + side].offset;
      }
      if (!solve_dense(S, rhs, x)) break;  // singular for every bound choice
      if (!satisfies_all(halfspaces, x, tol)) continue;
      bool duplicate = false;
      for (const Vec& v : vertices) {
        if (distance(v, x) <= 1e-9 * (1.0 + max_abs(v))) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) vertices.push_back(x);
    }
  });
  return vertices;
}

std::vector<Vec> canonical_order(std::vector<Vec> vertices) {
  if (vertices.size() < 2) return vertices;
  if (vertices.front().size() != 2) {
    std::sort(vertices.begin(), vertices.end());
    return vertices;
  }
  const Vec c = centroid(vertices);
  std::sort(vertices.begin(), vertices.end(), [&](const Vec& a, const Vec& b) {
    const double ta = std::atan2(a[1] - c[1], a[0] - c[0]);
    const double tb = std::atan2(b[1] - c[1], b[0] - c[0]);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  const std::size_t first = static_cast<std::size_t>(
      std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::rotate(vertices.begin(), vertices.begin() + static_cast<long>(first),
              vertices.end());
  return vertices;
}

std::optional<PolytopeSolution> polytope_at_alpha(const FuzzySystem& sys,
                                                  double alpha) {
  validate(sys);
  const std::size_t n = sys.unknowns();
  if (sys.equations() < n || rank_partition(sys.A).k < n) {
    throw RankDeficient("polytope_at_alpha: matrix must have full column rank");
  }
  PolytopeSolution p;
  p.alpha = alpha;
  p.halfspaces = band_halfspaces(sys, alpha);
  std::vector<Vec> verts = enumerate_vertices(p.halfspaces, n);
  if (verts.empty()) return std::nullopt;
  p.interior_point = centroid(verts);
  p.vertices = canonical_order(std::move(verts));
  for (const Vec& v : p.vertices) {
    std::vector<std::size_t> act;
    for (std::size_t h = 0; h < p.halfspaces.size(); ++h) {
      const double slack = 1e-9 * (1.0 + std::fabs(p.halfspaces[h].offset));
      if (std::fabs(dot(p.halfspaces[h].normal, v) - p.halfspaces[h].offset) <= slack) {
        act.push_back(h);
      }
    }
    p.active.push_back(std::move(act));
  }
  return p;
}

GeneratorForm parameterize(const PolytopeSolution& p) {
  if (p.vertices.empty()) throw EmptyPolytope("parameterize: no vertices");
  GeneratorForm g;
  g.interior = p.interior_point;
  for (const Vec& v : p.vertices) g.directions.push_back(sub(v, p.interior_point));
  return g;
}

MaxMembership max_membership(const FuzzySystem& sys, double tol_alpha) {
  auto p0 = polytope_at_alpha(sys, 0.0);
  if (!p0) throw Inconsistent("max_membership: the band intersection is empty");
  if (auto p1 = polytope_at_alpha(sys, 1.0)) {
    return {p1->interior_point, 1.0};
  }
  double lo = 0.0, hi = 1.0;
  PolytopeSolution best = std::move(*p0);
  for (int iter = 0; iter < 64 && hi - lo > tol_alpha; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (auto p = polytope_at_alpha(sys, mid)) {
      lo = mid;
      best = std::move(*p);
    } else {
      hi = mid;
    }
  }
  return {best.interior_point, lo};
}

double membership_over(const FuzzySystem& sys, const Vec& x) {
  const Vec residual = sys.A.apply(x);
  double mu = 1.0;
  for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
    mu = std::min(mu, sys.rhs[i].membership(residual[i]));
  }
  return mu;
}

}  // namespace fls
