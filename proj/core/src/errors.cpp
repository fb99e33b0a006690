#include "mfcat/errors.hpp"

namespace mfcat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonInvertibleLeadCoeff: return "NonInvertibleLeadCoeff";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ModulusPresent: return "ModulusPresent";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NoSolutionUpToDegree: return "NoSolutionUpToDegree";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotAFactorization: return "NotAFactorization";
    case ErrorKind::OmegaZeroDivisor: return "OmegaZeroDivisor";
    case ErrorKind::SquareFails: return "SquareFails";
    case ErrorKind::ObjectMismatch: return "ObjectMismatch";
    case ErrorKind::OmegaMismatch: return "OmegaMismatch";
    case ErrorKind::UnsupportedOmega: return "UnsupportedOmega";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::CokernelNotAnnihilated: return "CokernelNotAnnihilated";
    case ErrorKind::CompanionAssertFailed: return "CompanionAssertFailed";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::TermInvalid: return "TermInvalid";
    case ErrorKind::NotAnInflation: return "NotAnInflation";
    case ErrorKind::NotADeflation: return "NotADeflation";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::NotMono: return "NotMono";
    case ErrorKind::NotMCM: return "NotMCM";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::Validation: return "Validation";
  }
  return "Unknown";
}

std::string_view to_string(Certainty c) {
  return c == Certainty::proven ? "proven" : "bounded";
}

Error::Error(ErrorKind kind, const std::string& detail, Certainty certainty)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail),
      certainty_(certainty) {}

}  // namespace mfcat
