// Error types shared across the fuzzy linear system solver.

#pragma once

#include <stdexcept>
#include <string>

namespace fls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// fuzzy number construction / evaluation
struct OrderViolation : Error {
  using Error::Error;
};
struct MonotonicityViolation : Error {
  using Error::Error;
};
struct GridViolation : Error {
  using Error::Error;
};
struct DomainViolation : Error {
  using Error::Error;
};

// linear algebra
struct SingularMatrix : Error {
  using Error::Error;
};
struct NotSquare : Error {
  using Error::Error;
};
struct RankDeficient : Error {
  using Error::Error;
};
struct Inconsistent : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// polytopes
struct EmptyPolytope : Error {
  using Error::Error;
};
struct ProblemTooLarge : Error {
  using Error::Error;
};

// oracle
struct DimensionCap : Error {
  using Error::Error;
};

// io
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace fls
