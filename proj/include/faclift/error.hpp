#pragma once

#include <stdexcept>
#include <string>

namespace faclift {

// Every failure the library can signal, one code per condition so tests
// and callers can dispatch without string matching.
enum class Errc {
  // group construction
  NonAssociative,
  NoIdentity,
  BadInverse,
  LabelCollision,
  // cross-object discipline
  GroupMismatch,
  NotASubgroup,
  // representations
  WrongFamily,
  NotHomomorphism,
  IncompleteSet,
  NotIrreducible,
  DuplicateRep,
  NotCompleteIrrepSet,
  // voltage graph instances
  UnknownElementLabel,
  BadReversePairing,
  VoltageInverseViolation,
  SemiEdgeNonInvolution,
  // numerics
  NonSquare,
  DidNotConverge,
  InsufficientZeros,
  CardinalityMismatch,
  NonSymmetric,
  NonRealResult,
  // eigenvector lifting
  ConditionCViolated,
  ResidualTooLarge,
  ZeroVector,
  // walks
  BadWalk,
  ZeroLengthUnsupported,
  // I/O and misc
  UnknownFormat,
  ParseError,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::BadInverse: return "BadInverse";
    case Errc::LabelCollision: return "LabelCollision";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::IncompleteSet: return "IncompleteSet";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DuplicateRep: return "DuplicateRep";
    case Errc::NotCompleteIrrepSet: return "NotCompleteIrrepSet";
    case Errc::UnknownElementLabel: return "UnknownElementLabel";
    case Errc::BadReversePairing: return "BadReversePairing";
    case Errc::VoltageInverseViolation: return "VoltageInverseViolation";
    case Errc::SemiEdgeNonInvolution: return "SemiEdgeNonInvolution";
    case Errc::NonSquare: return "NonSquare";
    case Errc::DidNotConverge: return "DidNotConverge";
    case Errc::InsufficientZeros: return "InsufficientZeros";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NonRealResult: return "NonRealResult";
    case Errc::ConditionCViolated: return "ConditionCViolated";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::BadWalk: return "BadWalk";
    case Errc::ZeroLengthUnsupported: return "ZeroLengthUnsupported";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace faclift
