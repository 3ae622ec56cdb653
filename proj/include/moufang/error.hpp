#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moufang {

enum class ErrorCode {
  NotLatinSquare = 1,
  NoIdentity,
  NoTwoSidedInverse,
  NotPowerAssociative,
  OrderTooLarge,
  ParamTooSmall,
  BaseNotGroup,
  NotCentral,
  NoDecomposition,
  ClosureOverflow,
  MatchAmbiguous,
  PreconditionFailed,
  NotPrimePowerPattern,
  NotInCorpus,
  BadRecipe,
  ParseError,
  InvalidArgument,
  IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// C API reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moufang
