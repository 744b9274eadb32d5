#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drazinkit {

enum class ErrorCode {
  ShapeMismatch,
  KernelMismatch,
  SingularMatrix,
  ExactKernelUnsupported,
  IllConditionedBasis,
  EigenFailure,
  NotInClass,
  NotCommuting,
  HypothesisViolated,
  NotIntertwining,
  NotInvertible,
  IndexTooHigh,
  CouplingNotAdmissible,
  NonOrthogonalBasis,
  UnsatisfiableSpec,
  InvalidArgument,
  Schema,
};

std::string_view to_string(ErrorCode code);

/// True for the codes that signal a violated mathematical precondition
/// (as opposed to bad input or a numerical breakdown).
bool is_precondition(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drazinkit
