#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powclass {

enum class ErrorKind {
  CapExceeded,
  DegreeMismatch,
  NotMember,
  AmbientMismatch,
  NotNormal,
  NotPGroup,
  NotSylow,
  SylowNotInside,
  NotPowerfullyEmbedded,
  HypothesisViolated,
  GreedyStalled,
  UnsupportedPrime,
  BadParameter,
  ParseError,
  UnknownGroup,
  InternalConsistency,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::NotSylow: return "NotSylow";
    case ErrorKind::SylowNotInside: return "SylowNotInside";
    case ErrorKind::NotPowerfullyEmbedded: return "NotPowerfullyEmbedded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::GreedyStalled: return "GreedyStalled";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownGroup: return "UnknownGroup";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace powclass
