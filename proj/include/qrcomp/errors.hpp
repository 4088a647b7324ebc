#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qrcomp {

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. Always positioned.
class ParseError : public Error {
 public:
  ParseError(std::string message, SourceLocation where);

  const std::string& message() const noexcept { return message_; }
  const SourceLocation& where() const noexcept { return where_; }

 private:
  std::string message_;
  SourceLocation where_;
};

// Well-formed input violating a domain invariant. Errors raised while
// reading a file carry the position of the offending declaration.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::string message,
                           std::optional<SourceLocation> where = std::nullopt);

  const std::string& message() const noexcept { return message_; }
  const std::optional<SourceLocation>& where() const noexcept { return where_; }

  ValidationError located(SourceLocation where) const;

 private:
  std::string message_;
  std::optional<SourceLocation> where_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrcomp
