#include "qrcomp/errors.hpp"

#include <fmt/format.h>

#include <utility>

namespace qrcomp {

namespace {

std::string positioned(const std::string& message, const SourceLocation& at) {
  return fmt::format("{}:{}: {}", at.line, at.column, message);
}

}  // namespace

ParseError::ParseError(std::string message, SourceLocation where)
    : Error(positioned(message, where)), message_(std::move(message)), where_(where) {}

ValidationError::ValidationError(std::string message, std::optional<SourceLocation> where)
    : Error(where ? positioned(message, *where) : message),
      message_(std::move(message)),
      where_(where) {}

ValidationError ValidationError::located(SourceLocation where) const {
  if (where_) return *this;
  return ValidationError(message_, where);
}

}  // namespace qrcomp
