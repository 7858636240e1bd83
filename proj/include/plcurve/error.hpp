#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plc {

enum class ErrorKind {
  SyntaxError,
  NotHomogeneous,
  ZeroPolynomial,
  DegreeMismatch,
  BadPrime,
  NotReduced,
  NotSyzygy,
  NotStabilized,
  NotSingular,
  NonIsolated,
  IncompleteSingularLocus,
  CertificateMismatch,
  NegativeBetti,
  BadExponent,
  OrbitInconsistency,
  NotPolynomial,
  BadRange,
  BadDegree,
  DivisionFailure,
  VerificationFailure,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Errors caused by the caller's input, as opposed to internal consistency
// failures that indicate a bug or a falsified identity.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  // Byte offset into the parsed text, for syntax errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace plc
