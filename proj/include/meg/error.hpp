#pragma once

#include <stdexcept>
#include <string>

namespace meg {

enum class ErrorKind {
  kInvalidArgument,
  kSelfLoop,
  kParse,
  kNotConnected,
  kTooSmall,
  kLimitExceeded,
  kMethodMismatch,
  kNotP4Sparse,
};

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace meg
