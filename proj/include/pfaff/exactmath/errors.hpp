#pragma once

#include <stdexcept>
#include <string>

namespace pfaff {

enum class ErrorCode {
  ZeroDenominator,
  InconsistentSystem,
  UndeclaredFactor,
  MixedPool,
  SingularBasepoint,
  NbcDimMismatch,
  NonTerminationGuard,
  UnsupportedDimension,
  NotBetaNbc,
  ResonantWeights,
  NotFlat,
  NTooSmall,
  SingularPoint,
  DegenerateGauge,
  NonconvergentExponent,
  ToleranceNotMet,
  PathHitsSingularity,
  CombinatorialMismatch,
  CrossCheckFailed,
  ParseError,
  InvalidArgument,
};

inline const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZERO_DENOMINATOR";
    case ErrorCode::InconsistentSystem: return "INCONSISTENT_SYSTEM";
    case ErrorCode::UndeclaredFactor: return "UNDECLARED_FACTOR";
    case ErrorCode::MixedPool: return "MIXED_POOL_ERROR";
    case ErrorCode::SingularBasepoint: return "SINGULAR_BASEPOINT";
    case ErrorCode::NbcDimMismatch: return "NBC_DIM_MISMATCH";
    case ErrorCode::NonTerminationGuard: return "NON_TERMINATION_GUARD";
    case ErrorCode::UnsupportedDimension: return "UNSUPPORTED_DIMENSION";
    case ErrorCode::NotBetaNbc: return "NOT_BETANBC";
    case ErrorCode::ResonantWeights: return "RESONANT_WEIGHTS";
    case ErrorCode::NotFlat: return "NOT_FLAT";
    case ErrorCode::NTooSmall: return "N_TOO_SMALL";
    case ErrorCode::SingularPoint: return "SINGULAR_POINT";
    case ErrorCode::DegenerateGauge: return "DEGENERATE_GAUGE";
    case ErrorCode::NonconvergentExponent: return "NONCONVERGENT_EXPONENT";
    case ErrorCode::ToleranceNotMet: return "TOLERANCE_NOT_MET";
    case ErrorCode::PathHitsSingularity: return "PATH_HITS_SINGULARITY";
    case ErrorCode::CombinatorialMismatch: return "COMBINATORIAL_MISMATCH";
    case ErrorCode::CrossCheckFailed: return "CROSS_CHECK_FAILED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI's failure records) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pfaff
