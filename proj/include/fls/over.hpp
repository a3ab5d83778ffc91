// Overdetermined full-rank systems (m > n): each fuzzy equation bounds a band
// between two parallel hyperplanes; the solution set is the convex polytope
// obtained by intersecting all bands. Vertices are enumerated by brute force
// over boundary combinations; the top membership level is located by
// bisection on alpha.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fls/system.hpp"

namespace fls {

struct Halfspace {
  Vec normal;   // a row of A
  double offset;
  enum class Sense { GreaterEq, LessEq } sense;
  std::size_t row;  // originating equation
};

struct PolytopeSolution {
  std::vector<Vec> vertices;          // deduplicated, canonically ordered
  std::vector<Halfspace> halfspaces;  // 2m band boundaries
  Vec interior_point;                 // centroid of the vertices
  double alpha = 0.0;
  std::vector<std::vector<std::size_t>> active;  // active halfspaces per vertex
};

struct GeneratorForm {
  Vec interior;
  std::vector<Vec> directions;  // x_i - x_c per vertex
};

struct MaxMembership {
  Vec point;
  double alpha;
};

/// Two halfspaces per row i: a_i x >= lower_i(alpha) and a_i x <= upper_i(alpha).
std::vector<Halfspace> band_halfspaces(const FuzzySystem& sys, double alpha);

/// Signed feasibility test with relative slack on every halfspace.
bool satisfies_all(const std::vector<Halfspace>& halfspaces, const Vec& x,
                   double tol = 1e-9);

/// Brute force over C(m, n) row subsets times 2^n boundary choices; singular
/// subsystems are skipped, infeasible intersection points discarded, and
/// near-duplicates merged. Throws ProblemTooLarge beyond n > 8 or
/// C(m, n) > 1e6.
std::vector<Vec> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                    std::size_t n, double tol = 1e-9);

/// Canonical vertex ordering: counterclockwise around the centroid starting
/// at the lexicographically smallest vertex in 2-D, lexicographic otherwise.
std::vector<Vec> canonical_order(std::vector<Vec> vertices);

/// The alpha-cut polytope, or nullopt when the band intersection is empty.
/// Throws RankDeficient unless rank(A) = n and m >= n.
std::optional<PolytopeSolution> polytope_at_alpha(const FuzzySystem& sys,
                                                  double alpha);

/// Interior point plus vertex difference vectors. Throws EmptyPolytope.
GeneratorForm parameterize(const PolytopeSolution& p);

/// Largest alpha with a nonempty cut, found by bisection (at most 64 steps);
/// the point reported is the centroid of the last nonempty cut. Throws
/// Inconsistent when even alpha = 0 is empty.
MaxMembership max_membership(const FuzzySystem& sys, double tol_alpha = 1e-6);

/// Direct minimum over rows of the residual memberships.
double membership_over(const FuzzySystem& sys, const Vec& x);

}  // namespace fls
