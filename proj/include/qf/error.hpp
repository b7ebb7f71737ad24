#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

enum class ErrorCode {
  NotAPartialOrder,
  NoBottom,
  MissingJoin,
  ShapeMismatch,
  NotJoinPreserving,
  BottomNotPreserved,
  NotClosureOperator,
  CapExceeded,
  BottomViolation,
  JoinViolation,
  NotGalois,
  NotOrthomorphism,
  NotContinuous,
  PreconditionViolated,
  NotAssociative,
  NotBimorphic,
  BadUnit,
  BadInvolution,
  NotAMonoid,
  NotNucleus,
  NotAssociativeAction,
  NotAGenerator,
  NotPrincipal,
  NotSymmetric,
  LawViolated,
  UnknownGenerator,
  UnknownLaw,
  BadDocument,
};

std::string_view to_string(ErrorCode code);

/// Raised by every validator. `witness` holds the offending element indices
/// (pair, triple, ...) in the order the message names them.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorCode code, std::string message, std::vector<int> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace qf
