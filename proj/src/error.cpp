#include "qbb/error.hpp"

namespace qbb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::OddDiagonal: return "OddDiagonal";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotRealIndex: return "NotRealIndex";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::ZeroTau: return "ZeroTau";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::RegularityFailure: return "RegularityFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(d.code)) + ": " + d.message;
  }
  return out;
}

ErrorCode first_code(const std::vector<Diagnostic>& diagnostics) {
  return diagnostics.empty() ? ErrorCode::ValidationError : diagnostics.front().code;
}

}  // namespace

ValidationFailure::ValidationFailure(std::vector<Diagnostic> diagnostics)
    : Error(first_code(diagnostics), join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace qbb
