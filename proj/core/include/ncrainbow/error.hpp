#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncrainbow {

enum class ErrorCode {
  kMalformedTable,
  kNoIdentity,
  kNoInverse,
  kNotLatinSquare,
  kAssociativityViolation,
  kInvalidTwist,
  kNotAutomorphism,
  kNotHomomorphism,
  kNotCentral,
  kOrderMismatch,
  kAbelianGroup,
  kInvalidArgument,
  kInvalidSpec,
  kSearchBudgetExceeded,
  kPreconditionKappa,
  kColoringRejected,
  kBoundViolated,
  kParseError,
  kIoError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` carries the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncrainbow
