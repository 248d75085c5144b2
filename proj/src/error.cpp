#include "sfdga/error.hpp"

namespace sfdga {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::MissingImage: return "MissingImage";
    case ErrorKind::NegativeDegreeGenerator: return "NegativeDegreeGenerator";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::IllFormedAuto: return "IllFormedAuto";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyPresentation: return "EmptyPresentation";
    case ErrorKind::NotGroupReduction: return "NotGroupReduction";
    case ErrorKind::InvalidShift: return "InvalidShift";
    case ErrorKind::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sfdga
