#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "qrcomp/errors.hpp"

namespace qrcomp::detail {

// Character cursor with line/column tracking shared by the text parsers.
// Comments run from '#' to end of line. CR is treated as blank.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text);

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
  SourceLocation location() const noexcept { return {line_, column_}; }

  // Spaces, tabs, CR and comments; newlines too when `newlines` is set.
  void skip_blanks(bool newlines);
  bool at_line_end() const noexcept { return at_end() || peek() == '\n'; }
  // Consumes the end of the current line; fails if other text remains.
  void expect_line_end();

  bool consume(char c);
  void expect(char c, std::string_view what);
  bool consume_word(std::string_view w);  // whole-word match

  std::string identifier(std::string_view what);
  std::string word(std::string_view what);  // run of non-blank characters
  double number(std::string_view what);
  std::uint64_t integer(std::string_view what);
  bool starts_number() const noexcept;

  struct Mark {
    std::size_t pos;
    std::size_t line;
    std::size_t column;
  };
  Mark mark() const noexcept { return {pos_, line_, column_}; }
  void reset(const Mark& m) noexcept { pos_ = m.pos, line_ = m.line, column_ = m.column; }

  [[noreturn]] void fail(std::string message) const;
  [[noreturn]] static void fail_at(std::string message, SourceLocation at);

 private:
  void advance() noexcept;
  std::string_view scan_number_text() const noexcept;

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe_char(char c);

}  // namespace qrcomp::detail
