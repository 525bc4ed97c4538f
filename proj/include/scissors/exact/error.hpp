#pragma once
#include <stdexcept>
#include <string>

namespace scissors {

enum class ErrorKind {
  // input / parse (exit 2)
  ParseError,
  UnknownSuite,
  DimensionMismatch,
  IndexOutOfRange,
  DegreeOutOfRange,
  WrongAlgebra,
  NotInOmega,
  NotStable,
  NotUnitNorm,
  NotFiniteDimensional,
  NotExpressible,
  // numeric preconditions (exit 2)
  NoRootInInterval,
  MultipleRootsInInterval,
  DivisionByZero,
  NegativeSqrt,
  // geometry validation (exit 3)
  NonManifoldBoundary,
  UnorientableBoundary,
  PointOnBoundary,
  InvalidPolytope,
  SpanMissingFromPool,
  // resource caps (exit 4)
  PrecisionExhausted,
  RefinementTooLarge,
  TooManyPoints,
  PoolExplosion,
  SizeCap,
  // internal invariant violation (exit 5)
  InvariantViolation,
};

const char* kind_name(ErrorKind k);
int exit_code(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// internal consistency guard; never compiled out
inline void ensure(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::InvariantViolation, msg);
}

}  // namespace scissors
