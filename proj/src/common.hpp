#pragma once

#include <stdexcept>
#include <string>

namespace kmc {

using Int = long long;

enum class ErrorCode {
  Parse,
  BadDiagonal,
  PositiveOffDiagonal,
  AsymmetricZeroPattern,
  NotSymmetrizable,
  UnknownIndex,
  NotFiniteType,
  NotDominant,
  StringNotFound,
  NonIntegralC,
  MultiEdgeDetected,
  NotInVirtualImage,
  IncomparableDepths,
  InvalidArgument,
  Internal,
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

}  // namespace kmc
