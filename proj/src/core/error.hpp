#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ans {

/// Category of a failure; the C API maps these one-to-one onto status codes.
enum class ErrorKind {
  InvalidArgument,
  Parse,
  InvalidSpec,
  NotSubset,
  RejectedWord,
  EmptyLanguage,
  FiniteLanguage,
  OutOfRange,
  NoRecurrence,
  Infeasible,
  FiniteFixedPoint,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Regex or spec-file syntax error; `position` is a 0-based character offset
/// (regex) or 1-based line number (spec file).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, what + " at " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ans
