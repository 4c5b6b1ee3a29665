#pragma once

#include <stdexcept>
#include <string>

namespace holdercert {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  NotPositive,
  NegativeExponent,
  ShapeMismatch,
  BadExponent,
  ZeroOperator,
  UnknownKind,
  ZeroBudget,
  InvalidAlgebra,
  BadDocument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace holdercert
