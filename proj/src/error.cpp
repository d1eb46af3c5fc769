#include "prym/error.hpp"

namespace prym {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::RelatorNotPreserved: return "RELATOR_NOT_PRESERVED";
    case ErrorCode::OrientationReversing: return "ORIENTATION_REVERSING";
    case ErrorCode::NonSymplectic: return "NON_SYMPLECTIC";
    case ErrorCode::NotLiftable: return "NOT_LIFTABLE";
    case ErrorCode::OddWord: return "ODD_WORD";
    case ErrorCode::NotInScope: return "NOT_IN_SCOPE";
    case ErrorCode::Explosion: return "EXPLOSION";
    case ErrorCode::InsufficientData: return "INSUFFICIENT_DATA";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace prym
