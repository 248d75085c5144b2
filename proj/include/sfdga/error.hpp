#pragma once

#include <stdexcept>
#include <string>

namespace sfdga {

enum class ErrorKind {
  MixedRings,
  NotAUnit,
  SignatureMismatch,
  MissingImage,
  NegativeDegreeGenerator,
  MissingValue,
  IllFormedAuto,
  IndexOutOfRange,
  EmptyPresentation,
  NotGroupReduction,
  InvalidShift,
  InternalVerificationFailure,
  SyntaxError,
  DuplicateGenerator,
  UnknownGenerator,
  KindMismatch,
  MalformedCertificate,
  RingMismatch,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sfdga
