#pragma once

#include <stdexcept>
#include <string>

namespace quotshrink {

// Two error families, matching the CLI exit-code contract:
//   PreconditionError - the caller's input violates an operation's contract
//                       (exit code 1),
//   InvariantError    - an internal consistency check failed, which means a
//                       bug, never bad input (exit code 2).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class InvariantError : public Error {
public:
  using Error::Error;
};

#define QUOTSHRINK_PRECONDITION_ERROR(NAME)                   \
  class NAME : public PreconditionError {                     \
  public:                                                     \
    explicit NAME(const std::string& what)                    \
        : PreconditionError(#NAME, what) {}                   \
  }

#define QUOTSHRINK_INVARIANT_ERROR(NAME)                      \
  class NAME : public InvariantError {                        \
  public:                                                     \
    explicit NAME(const std::string& what)                    \
        : InvariantError(#NAME, what) {}                      \
  }

QUOTSHRINK_PRECONDITION_ERROR(DegreeMismatch);
QUOTSHRINK_PRECONDITION_ERROR(PointOutOfRange);
QUOTSHRINK_PRECONDITION_ERROR(MalformedCycles);
QUOTSHRINK_PRECONDITION_ERROR(InvalidPermutation);
QUOTSHRINK_PRECONDITION_ERROR(NotASubgroup);
QUOTSHRINK_PRECONDITION_ERROR(NotInGroup);
QUOTSHRINK_PRECONDITION_ERROR(NotNormal);
QUOTSHRINK_PRECONDITION_ERROR(NotTransitive);
QUOTSHRINK_PRECONDITION_ERROR(NotInvariant);
QUOTSHRINK_PRECONDITION_ERROR(NotSemisimple);
QUOTSHRINK_PRECONDITION_ERROR(NotMinimalNormal);
QUOTSHRINK_PRECONDITION_ERROR(NotAHomomorphism);
QUOTSHRINK_PRECONDITION_ERROR(NotInjective);
QUOTSHRINK_PRECONDITION_ERROR(AbelianFactor);
QUOTSHRINK_PRECONDITION_ERROR(OrderCapExceeded);
QUOTSHRINK_PRECONDITION_ERROR(DegenerateBase);
QUOTSHRINK_PRECONDITION_ERROR(BadPoints);
QUOTSHRINK_PRECONDITION_ERROR(PreconditionFailed);
QUOTSHRINK_PRECONDITION_ERROR(KernelMismatch);
QUOTSHRINK_PRECONDITION_ERROR(BoundMismatch);
QUOTSHRINK_PRECONDITION_ERROR(MalformedInput);

QUOTSHRINK_INVARIANT_ERROR(BoundViolation);
QUOTSHRINK_INVARIANT_ERROR(LemmaViolated);
QUOTSHRINK_INVARIANT_ERROR(InternalCheckFailed);

#undef QUOTSHRINK_PRECONDITION_ERROR
#undef QUOTSHRINK_INVARIANT_ERROR

}  // namespace quotshrink
