#pragma once

#include <stdexcept>
#include <string>

namespace homalg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HOMALG_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

HOMALG_DEFINE_ERROR(FieldMismatch);
HOMALG_DEFINE_ERROR(DimensionMismatch);
HOMALG_DEFINE_ERROR(DivisionByZero);
HOMALG_DEFINE_ERROR(SearchSpaceTooLarge);
HOMALG_DEFINE_ERROR(UnsupportedDimensionOverQ);
HOMALG_DEFINE_ERROR(NotTwoSidedUnital);
HOMALG_DEFINE_ERROR(NotUnitalOnSide);
HOMALG_DEFINE_ERROR(InternalCheckFailure);
HOMALG_DEFINE_ERROR(PreconditionViolated);
HOMALG_DEFINE_ERROR(NotLeibniz);
HOMALG_DEFINE_ERROR(InvariantViolation);
HOMALG_DEFINE_ERROR(DimensionLimitExceeded);

#undef HOMALG_DEFINE_ERROR

/// Raised by the file reader; carries the 1-based line and column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error("ParseError: " + what +
              (line ? " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                    : std::string())),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace homalg
