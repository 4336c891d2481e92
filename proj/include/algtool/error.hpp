#pragma once

#include <stdexcept>
#include <string>

namespace algtool {

/// Machine-readable failure category. The CLI reports these as `code`.
enum class ErrorCode {
  kModulus,        // non-prime or even modulus
  kPrimeMismatch,  // cyclotomic operands over different fields
  kDivisionByZero,
  kRingMismatch,
  kArity,
  kRange,
  kNotSquare,
  kResource,
  kStability,
  kPole,
  kIndeterminate,
  kConditioning,
  kSampling,
  kAsymmetric,
  kHypothesis,  // input outside a lemma's open set
  kUsage,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace algtool
