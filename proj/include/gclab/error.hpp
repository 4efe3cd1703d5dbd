#pragma once

#include <stdexcept>
#include <string>

namespace gclab {

enum class ErrorCode {
  EqualPoints,
  SameLine,
  DegenerateLine,
  DuplicateNode,
  OutOfRange,
  ZeroPolynomial,
  NodeNotInSet,
  NotIndependent,
  NotCorrect,
  NotMaximal,
  TooLarge,
  NotFactorable,
  LineNotUsed,
  NotGeneralPosition,
  ConstructionFailed,
  RetriesExhausted,
  ProfileOverflow,
  NotGC,
  NotMaximalCubic,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gclab
