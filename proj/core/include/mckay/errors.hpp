#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mckay {

enum class ErrorKind {
  DivisionByZero,
  CapExceeded,
  NotInvertible,
  PromotionOverflow,
  NonIntegerAge,
  ParityViolation,
  WeightSumMismatch,
  NotAnEigenvalue,
  NotIsolated,
  NotSL,
  CoverageGap,
  CoverageOverlap,
  Parse,
  UnknownBuiltin,
  QuadratureFailure,
  UnsupportedFormat,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // CLI contract: 0 success, 1 validation failure, 2 parse error,
  // 3 internal assertion failure, 4 resource cap.
  int exit_code() const noexcept;

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, std::string expected, const std::string& what)
      : Error(ErrorKind::Parse, what),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace mckay
