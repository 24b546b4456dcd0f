#pragma once

#include <stdexcept>
#include <string>

namespace pcadiag {

/// Failure categories surfaced by the library. Every throwing API documents
/// which kinds it can raise.
enum class ErrorKind {
  InvalidMatrix,
  NonFiniteInput,
  ConvergenceFailure,
  ShapeViolation,
  IndexViolation,
  InsufficientData,
  PoleEvaluation,
  InvalidProblem,
  ZeroMeanInput,
  PreconditionViolation,
  InvalidEpsilon,
  DegenerateDirection,
  InvalidArgument,
  MalformedInput,
  ParseError,
  EmptyInput,
  GenerationFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace pcadiag
