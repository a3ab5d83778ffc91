#include "fls/system.hpp"

#include "fls/errors.hpp"

namespace fls {

void validate(const FuzzySystem& sys) {
  if (sys.A.empty()) throw DimensionMismatch("system matrix is empty");
  if (sys.rhs.size() != sys.A.rows()) {
    throw DimensionMismatch("right-hand side length must match the row count");
  }
}

}  // namespace fls
