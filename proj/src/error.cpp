// skh - finite skew lattice and skew Heyting algebra workbench

#include "skh/error.hpp"

namespace skh {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::MalformedTable: return "MalformedTable";
      case ErrorKind::BadConstant: return "BadConstant";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::InvalidPoset: return "InvalidPoset";
      case ErrorKind::Usage: return "Usage";
      case ErrorKind::PreconditionFailed: return "PreconditionFailed";
      case ErrorKind::CostaMismatch: return "CostaMismatch";
      case ErrorKind::NotComposable: return "NotComposable";
      case ErrorKind::NotACongruence: return "NotACongruence";
      case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
      case ErrorKind::NotUnique: return "NotUnique";
      case ErrorKind::NotCoStronglyDistributive:
        return "NotCoStronglyDistributive";
      case ErrorKind::NoTop: return "NoTop";
      case ErrorKind::AmbiguousDiff: return "AmbiguousDiff";
      case ErrorKind::TooLarge: return "TooLarge";
      case ErrorKind::InconsistencyDetected: return "InconsistencyDetected";
      case ErrorKind::CoherenceFailure: return "CoherenceFailure";
      case ErrorKind::EsakiaFormulaMismatch: return "EsakiaFormulaMismatch";
      case ErrorKind::FactorizationNotFound: return "FactorizationNotFound";
    }
    return "Unknown";
  }

  bool is_inconsistency(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InconsistencyDetected:
      case ErrorKind::CoherenceFailure:
      case ErrorKind::EsakiaFormulaMismatch:
      case ErrorKind::FactorizationNotFound: return true;
      default: return false;
    }
  }

}  // namespace skh
