#include "text_cursor.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>

namespace qrcomp::detail {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

std::string describe_char(char c) {
  if (c == '\0') return "end of input";
  if (c == '\n') return "end of line";
  auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return fmt::format("'{}'", c);
  return fmt::format("byte 0x{:02x}", u);
}

TextCursor::TextCursor(std::string_view text) : text_(text) {
  if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
}

void TextCursor::advance() noexcept {
  if (text_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void TextCursor::skip_blanks(bool newlines) {
  while (!at_end()) {
    char c = peek();
    if (is_blank(c) || (newlines && c == '\n')) {
      advance();
    } else if (c == '#') {
      while (!at_end() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

void TextCursor::expect_line_end() {
  skip_blanks(false);
  if (!at_line_end()) fail(fmt::format("unexpected {} at end of line", describe_char(peek())));
  if (!at_end()) advance();
}

bool TextCursor::consume(char c) {
  if (!at_end() && peek() == c) {
    advance();
    return true;
  }
  return false;
}

void TextCursor::expect(char c, std::string_view what) {
  if (!consume(c)) fail(fmt::format("expected {}, found {}", what, describe_char(peek())));
}

bool TextCursor::consume_word(std::string_view w) {
  if (text_.substr(pos_, w.size()) != w) return false;
  const std::size_t end = pos_ + w.size();
  if (end < text_.size() && is_ident_char(text_[end])) return false;
  for (std::size_t i = 0; i < w.size(); ++i) advance();
  return true;
}

std::string TextCursor::identifier(std::string_view what) {
  if (!is_ident_start(peek())) fail(fmt::format("expected {}, found {}", what, describe_char(peek())));
  std::string out;
  while (!at_end() && is_ident_char(peek())) {
    out.push_back(peek());
    advance();
  }
  return out;
}

std::string TextCursor::word(std::string_view what) {
  std::string out;
  while (!at_end() && !is_blank(peek()) && peek() != '\n') {
    out.push_back(peek());
    advance();
  }
  if (out.empty()) fail(fmt::format("expected {}, found {}", what, describe_char(peek())));
  return out;
}

bool TextCursor::starts_number() const noexcept {
  char c = peek();
  if (is_digit(c)) return true;
  return c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]);
}

std::string_view TextCursor::scan_number_text() const noexcept {
  std::size_t i = pos_;
  auto digits = [&] {
    std::size_t start = i;
    while (i < text_.size() && is_digit(text_[i])) ++i;
    return i - start;
  };
  std::size_t mantissa = digits();
  if (i < text_.size() && text_[i] == '.') {
    ++i;
    mantissa += digits();
  }
  if (mantissa == 0) return {};
  if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
    std::size_t save = i++;
    if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
    if (digits() == 0) i = save;
  }
  return text_.substr(pos_, i - pos_);
}

double TextCursor::number(std::string_view what) {
  const SourceLocation at = location();
  std::string_view s = scan_number_text();
  if (s.empty()) fail(fmt::format("expected {}, found {}", what, describe_char(peek())));
  // Letters or a second point glued to the literal make it malformed.
  const std::size_t end = pos_ + s.size();
  if (end < text_.size() && (is_ident_char(text_[end]) || text_[end] == '.')) {
    fail_at(fmt::format("malformed number in {}", what), at);
  }
  double value = 0.0;
  std::string buf(s);
  if (buf.front() == '.') buf.insert(buf.begin(), '0');
  auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{} || ptr != buf.data() + buf.size() || !std::isfinite(value)) {
    fail_at(fmt::format("malformed number in {}", what), at);
  }
  for (std::size_t i = 0; i < s.size(); ++i) advance();
  return value;
}

std::uint64_t TextCursor::integer(std::string_view what) {
  const SourceLocation at = location();
  if (!is_digit(peek())) fail(fmt::format("expected {}, found {}", what, describe_char(peek())));
  std::size_t end = pos_;
  while (end < text_.size() && is_digit(text_[end])) ++end;
  if (end < text_.size() && (is_ident_char(text_[end]) || text_[end] == '.')) {
    fail_at(fmt::format("malformed integer in {}", what), at);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
  if (ec != std::errc{}) fail_at(fmt::format("integer out of range in {}", what), at);
  while (pos_ < end) advance();
  return value;
}

void TextCursor::fail(std::string message) const { fail_at(std::move(message), location()); }

void TextCursor::fail_at(std::string message, SourceLocation at) {
  throw ParseError(std::move(message), at);
}

}  // namespace qrcomp::detail
