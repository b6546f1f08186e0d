#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dedekind {

enum class ErrorCode {
  kInvalidArgument,
  kZeroDenominator,
  kNotCoprime,
  kNotOdd,
  kInvalidInstance,
  kEqualFractions,
  kNoBranchApplies,
  kPreconditionViolated,
  kNotAdmissible,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for every library error. The message names the
// violated constraint, e.g. "InvalidInstance: a^2 + 1 not divisible by t".
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace dedekind
