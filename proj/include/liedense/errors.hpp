#pragma once

#include <stdexcept>
#include <string>

namespace liedense {

// Failure categories surfaced by the library.  Precondition and data errors
// throw; verification campaigns report per-case verdicts instead of throwing.
enum class ErrorKind {
  InvalidType,         // inadmissible root-system family/rank
  ZeroVector,          // pairing or reflection against the zero root
  NonIntegral,         // weight fails an integrality requirement
  NotInSpan,           // vector outside the expected span
  NotARoot,            // vector is not a (positive) root of the system
  NonDominant,         // weight fails the dominance requirement
  AlgebraMismatch,     // operands attached to different algebras
  NonDiagonalizable,   // commuting family not split by candidate eigenvalues
  DimensionOverflow,   // dense construction beyond the configured bound
  NotFoundWithinBound, // search exhausted its bound without success
  DimensionMismatch,   // constructed object has the wrong dimension
  HypothesisNotMet,    // arguments violate a stated hypothesis
  IndexOutOfRange,     // simple-root or basis index outside the valid range
  LoadError,           // malformed or inconsistent input file
  NotAShear,           // flow requested for a field without the shear property
  NotSymplectic,       // matrix fails the symplectic-form condition
  NonFinite,           // numeric trajectory left the finite range
  Internal,            // invariant violation (a bug, not a user error)
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NonDominant: return "NonDominant";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NonDiagonalizable: return "NonDiagonalizable";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::NotFoundWithinBound: return "NotFoundWithinBound";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LoadError: return "LoadError";
    case ErrorKind::NotAShear: return "NotAShear";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace liedense
