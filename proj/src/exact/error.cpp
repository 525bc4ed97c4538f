#include "scissors/exact/error.hpp"

namespace scissors {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::WrongAlgebra: return "WrongAlgebra";
    case ErrorKind::NotInOmega: return "NotInOmega";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotUnitNorm: return "NotUnitNorm";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NotExpressible: return "NotExpressible";
    case ErrorKind::NoRootInInterval: return "NoRootInInterval";
    case ErrorKind::MultipleRootsInInterval: return "MultipleRootsInInterval";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeSqrt: return "NegativeSqrt";
    case ErrorKind::NonManifoldBoundary: return "NonManifoldBoundary";
    case ErrorKind::UnorientableBoundary: return "UnorientableBoundary";
    case ErrorKind::PointOnBoundary: return "PointOnBoundary";
    case ErrorKind::InvalidPolytope: return "InvalidPolytope";
    case ErrorKind::SpanMissingFromPool: return "SpanMissingFromPool";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::RefinementTooLarge: return "RefinementTooLarge";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::PoolExplosion: return "PoolExplosion";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonManifoldBoundary:
    case ErrorKind::UnorientableBoundary:
    case ErrorKind::PointOnBoundary:
    case ErrorKind::InvalidPolytope:
    case ErrorKind::SpanMissingFromPool:
      return 3;
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::RefinementTooLarge:
    case ErrorKind::TooManyPoints:
    case ErrorKind::PoolExplosion:
    case ErrorKind::SizeCap:
      return 4;
    case ErrorKind::InvariantViolation:
      return 5;
    default:
      return 2;
  }
}

}  // namespace scissors
