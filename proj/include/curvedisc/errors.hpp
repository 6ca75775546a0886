#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvedisc {

enum class ErrorCode {
  NotDivisible,
  DivisionByZero,
  InconsistentResidues,
  WrongRing,
  InvalidRing,
  SyntaxError,
  NotHomogeneous,
  UnknownVariable,
  RingMismatch,
  ArityMismatch,
  DegenerateSpecialization,
  DegreeConstraint,
  DegenerateLinearForms,
  FieldTooLarge,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace curvedisc
