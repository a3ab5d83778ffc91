// A crisp m x n matrix paired with m fuzzy right-hand sides.

#pragma once

#include <vector>

#include "fls/fuzzy_number.hpp"
#include "fls/matrix.hpp"

namespace fls {

struct FuzzySystem {
  Matrix A;
  std::vector<FuzzyNumber> rhs;

  std::size_t equations() const { return A.rows(); }
  std::size_t unknowns() const { return A.cols(); }

  /// Core representatives of the right-hand sides (b_cr).
  Vec crisp_rhs() const {
    Vec b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = core_representative(rhs[i]);
    return b;
  }
};

/// Throws DimensionMismatch unless rhs length matches the row count and the
/// matrix is nonempty.
void validate(const FuzzySystem& sys);

}  // namespace fls
