#pragma once

#include <stdexcept>
#include <string>

namespace quospec {

enum class ErrorCode {
  MismatchedGroup,
  QuotientTooLarge,
  Parse,
  NonSquare,
  DimensionTooLarge,
  NoConvergence,
  NotIntegral,
  OffTorus,
  TooLarge,
  UnsupportedRank,
  NotPrime,
  NotOddPrime,
  Overflow,
  InvalidParams,
  Config,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Every failure in the library surfaces as one of these; the code is
/// stable and maps one-to-one onto the C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace quospec
