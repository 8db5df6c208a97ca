#pragma once

#include <stdexcept>
#include <string>

namespace catena {

enum class ErrorKind {
  CycleDetected,
  NotALattice,
  RedundantCover,
  NotComparable,
  SizeLimitExceeded,
  NotIrreducible,
  NotPrime,
  TooLarge,
  NotAModule,
  NotMaximal,
  NotAnIdeal,
  NotMinimal,
  NotConductorMaximal,
  InconsistentCharacterization,
  HypothesisNotMet,
  TypePatternMismatch,
  ParseError,
  SpecError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace catena
