#include "catena/error.hpp"

namespace catena {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotConductorMaximal: return "NotConductorMaximal";
    case ErrorKind::InconsistentCharacterization: return "InconsistentCharacterization";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::TypePatternMismatch: return "TypePatternMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SpecError: return "SpecError";
  }
  return "Error";
}

}  // namespace catena
