// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <stdexcept>
#include <string>

namespace monideal {

enum class ErrorCode {
  ring_mismatch,
  invalid_argument,
  resource_limit,
  zero_or_unit_ideal,
  missing_family_entry,
  inclusion_violation,
  condition5_violation,
  syntax_error,
};

const char* to_string(ErrorCode code) noexcept;

// Base of every error raised by the library. The code is what the CLI maps to
// an exit status; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define MONIDEAL_DEFINE_ERROR(Name, code_value)                              \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorCode::code_value, what) {} \
  };

MONIDEAL_DEFINE_ERROR(RingMismatch, ring_mismatch)
MONIDEAL_DEFINE_ERROR(InvalidArgument, invalid_argument)
MONIDEAL_DEFINE_ERROR(ResourceLimit, resource_limit)
MONIDEAL_DEFINE_ERROR(ZeroOrUnitIdeal, zero_or_unit_ideal)
MONIDEAL_DEFINE_ERROR(MissingFamilyEntry, missing_family_entry)
MONIDEAL_DEFINE_ERROR(InclusionViolation, inclusion_violation)
MONIDEAL_DEFINE_ERROR(Condition5Violation, condition5_violation)

#undef MONIDEAL_DEFINE_ERROR

// Parse errors carry a 1-based source location.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::syntax_error,
              std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace monideal
