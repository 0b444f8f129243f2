#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fplab {

enum class ErrorCode {
  NotPrime,
  TooLarge,
  TrivialCharacter,
  FieldMismatch,
  ZeroDilation,
  UnboundVariable,
  EmptySet,
  ZeroInA,
  NotInterval,
  MissingParam,
  TooSmall,
  BadParams,
  BadFamily,
  BadConfig,
  BadInput,
  ParseError,
  SpectralMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above; the CLI maps them to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fplab
