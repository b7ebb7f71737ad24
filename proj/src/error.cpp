#include "qf/error.hpp"

namespace qf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NoBottom: return "NoBottom";
    case ErrorCode::MissingJoin: return "MissingJoin";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorCode::BottomNotPreserved: return "BottomNotPreserved";
    case ErrorCode::NotClosureOperator: return "NotClosureOperator";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BottomViolation: return "BottomViolation";
    case ErrorCode::JoinViolation: return "JoinViolation";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::NotOrthomorphism: return "NotOrthomorphism";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotBimorphic: return "NotBimorphic";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::NotAMonoid: return "NotAMonoid";
    case ErrorCode::NotNucleus: return "NotNucleus";
    case ErrorCode::NotAssociativeAction: return "NotAssociativeAction";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
    case ErrorCode::NotPrincipal: return "NotPrincipal";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::LawViolated: return "LawViolated";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::UnknownLaw: return "UnknownLaw";
    case ErrorCode::BadDocument: return "BadDocument";
  }
  return "Unknown";
}

ValidationError::ValidationError(ErrorCode code, std::string message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + std::move(message)),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace qf
