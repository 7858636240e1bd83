#include "plcurve/error.hpp"

namespace plc {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotSyzygy: return "NotSyzygy";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::IncompleteSingularLocus: return "IncompleteSingularLocus";
    case ErrorKind::CertificateMismatch: return "CertificateMismatch";
    case ErrorKind::NegativeBetti: return "NegativeBetti";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::OrbitInconsistency: return "OrbitInconsistency";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::DivisionFailure: return "DivisionFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::BadPrime:
    case ErrorKind::NotReduced:
    case ErrorKind::NotSingular:
    case ErrorKind::BadRange:
    case ErrorKind::BadDegree:
    case ErrorKind::InvalidArgument:
    case ErrorKind::IncompleteSingularLocus:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message),
      kind_(kind),
      position_(position) {}

}  // namespace plc
