#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

enum class ErrorCode {
  CapExceeded,
  EmptyDomain,
  BadParams,
  PartialNotSupported,
  DimensionMismatch,
  PointOutsideDomain,
  NotReadOnce,
  UncoveredColumn,
  PostselectionImpossible,
  UnknownClaim,
  ParseError,
  Internal,
};

const char* to_string(ErrorCode code);

/// Exception type used across the library; `code()` drives the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::PartialNotSupported: return "PartialNotSupported";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::NotReadOnce: return "NotReadOnce";
    case ErrorCode::UncoveredColumn: return "UncoveredColumn";
    case ErrorCode::PostselectionImpossible: return "PostselectionImpossible";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace bfc
