#pragma once

#include <stdexcept>
#include <string>

namespace mpp {

// Error categories, mirroring the failure modes of each subsystem.  The CLI
// maps InputError-kinds to exit code 2 and CheckFailure-kinds to exit code 1.
enum class ErrKind {
  DegenerateInput,
  NotAVertex,
  DimensionMismatch,
  EmptySlice,
  TooManyVertices,
  EllConstantOnEdge,
  NonSimpleExtremum,
  NotStratified,
  JoinDimensionMismatch,
  BadArity,
  BadParameter,
  ParseError,
  NotInvertible,
  DegreeExceedsRank,
  NotDivisible,
  NoSolution,
  NotPalindromic,
  BadInput,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrKind kind() const { return kind_; }

  // True for malformed inputs (usage errors), false for failed mathematical
  // preconditions discovered while computing.
  bool isInputError() const {
    switch (kind_) {
    case ErrKind::ParseError:
    case ErrKind::BadArity:
    case ErrKind::BadParameter:
    case ErrKind::BadInput:
    case ErrKind::TooManyVertices:
      return true;
    default:
      return false;
    }
  }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

} // namespace mpp
