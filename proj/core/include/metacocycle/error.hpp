#ifndef METACOCYCLE_ERROR_HPP
#define METACOCYCLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace metacocycle {

enum class ErrorKind {
  SingularMatrix,
  ShapeMismatch,
  NotAUnit,
  ZeroArgument,
  NotSymmetric,
  PrecisionTooLow,
  SnapFailure,
  NotSimilitude,
  NotIsometry,
  IndexOutOfRange,
  ZeroScale,
  RetryExhausted,
  NotFound,
  DegenerateForm,
  NotLagrangian,
  ChiUnavailable,
  InvalidContext,
  CalibrationMismatch,
  UnknownSuite,
  InvalidConfig,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace metacocycle

#endif  // METACOCYCLE_ERROR_HPP
