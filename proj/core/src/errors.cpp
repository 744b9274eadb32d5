#include "drazinkit/errors.hpp"

namespace drazinkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::KernelMismatch: return "KernelMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ExactKernelUnsupported: return "ExactKernelUnsupported";
    case ErrorCode::IllConditionedBasis: return "IllConditionedBasis";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::IndexTooHigh: return "IndexTooHigh";
    case ErrorCode::CouplingNotAdmissible: return "CouplingNotAdmissible";
    case ErrorCode::NonOrthogonalBasis: return "NonOrthogonalBasis";
    case ErrorCode::UnsatisfiableSpec: return "UnsatisfiableSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

bool is_precondition(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInClass:
    case ErrorCode::NotCommuting:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::NotIntertwining:
    case ErrorCode::NotInvertible:
    case ErrorCode::IndexTooHigh:
    case ErrorCode::CouplingNotAdmissible:
    case ErrorCode::NonOrthogonalBasis:
    case ErrorCode::SingularMatrix:
      return true;
    default:
      return false;
  }
}

}  // namespace drazinkit
