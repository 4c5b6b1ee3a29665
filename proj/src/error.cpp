#include "holdercert/error.hpp"

namespace holdercert {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::ZeroBudget: return "ZeroBudget";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::BadDocument: return "BadDocument";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace holdercert
