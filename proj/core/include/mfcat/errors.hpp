#ifndef MFCAT_ERRORS_HPP
#define MFCAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfcat {

enum class ErrorKind {
  UnknownVariable,
  NonInvertibleLeadCoeff,
  InvalidRing,
  Syntax,
  ZeroInput,
  DimensionMismatch,
  RingMismatch,
  ModulusPresent,
  ArityMismatch,
  NoSolutionUpToDegree,
  NotHomogeneous,
  NotAFactorization,
  OmegaZeroDivisor,
  SquareFails,
  ObjectMismatch,
  OmegaMismatch,
  UnsupportedOmega,
  NotInjective,
  CokernelNotAnnihilated,
  CompanionAssertFailed,
  NotExact,
  TermInvalid,
  NotAnInflation,
  NotADeflation,
  SourceMismatch,
  NotMono,
  NotMCM,
  NonSquare,
  Validation,
};

std::string_view to_string(ErrorKind kind);

/// Whether a negative answer is a proof (graded mode) or only means
/// "nothing found within the degree bound".
enum class Certainty { proven, bounded };

std::string_view to_string(Certainty c);

/// Every failure in the library surfaces as this exception. `kind()` is the
/// stable taxonomy used by the CLI; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, Certainty certainty = Certainty::proven);

  ErrorKind kind() const noexcept { return kind_; }
  /// `bounded` when the failure only means "nothing found within the degree bound".
  Certainty certainty() const noexcept { return certainty_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  Certainty certainty_;
};

/// A boolean answer together with how much it can be trusted.
struct Verdict {
  bool value = false;
  Certainty certainty = Certainty::proven;
};

}  // namespace mfcat

#endif  // MFCAT_ERRORS_HPP
