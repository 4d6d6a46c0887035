#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crs {

// Error categories, numbered to match CLI exit codes and C API statuses.
enum class ErrorCode : int {
  Internal = 1,
  InvalidInput = 2,
  BudgetExceeded = 3,
  FormatMismatch = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorCode::InvalidInput, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what, long long partial = -1)
      : Error(ErrorCode::BudgetExceeded, what), partial_(partial) {}
  // Partial progress at the moment the budget ran out (-1 when meaningless).
  long long partial() const { return partial_; }

 private:
  long long partial_;
};

class FormatMismatch : public Error {
 public:
  explicit FormatMismatch(const std::string& what)
      : Error(ErrorCode::FormatMismatch, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::Internal, what) {}
};

}  // namespace crs
