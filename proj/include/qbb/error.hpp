#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qbb {

enum class ErrorCode {
  DivisionByZero,
  OutOfRange,
  NotRegular,
  OddDiagonal,
  PositiveOffDiagonal,
  NotSymmetrizable,
  NotRealIndex,
  AlphabetMismatch,
  DegreeTooLarge,
  InconsistentSystem,
  ZeroTau,
  NotDominant,
  RegularityFailure,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

// Every failure the engine reports carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Diagnostic {
  ErrorCode code;
  std::string message;
};

// Raised when validation finds one or more problems; all of them are kept.
class ValidationFailure : public Error {
 public:
  explicit ValidationFailure(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace qbb
