// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_SRC_CURSOR_HPP
#define OPSLICER_SRC_CURSOR_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "opslicer/error.hpp"

namespace opslicer::detail {

inline bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

inline bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Scanner over one line of DSL text with 1-based error positions.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Character directly at the cursor, without skipping blanks.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t number() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected a number");
    std::size_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
  // A maximal run of non-blank characters.
  std::string raw_token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }
  void keyword(std::string_view word) {
    skip_ws();
    const std::size_t start = pos_;
    if (text_.substr(pos_, word.size()) != word ||
        (pos_ + word.size() < text_.size() && is_ident_char(text_[pos_ + word.size()]))) {
      pos_ = start;
      fail("expected '" + std::string(word) + "'");
    }
    pos_ += word.size();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }
  std::string_view rest() const { return text_.substr(pos_); }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Splits text into lines, dropping a trailing '\r'.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    f(l, line);
    if (end == text.size()) break;
    start = end + 1;
    ++line;
  }
}

// Text of a line with any '#' comment removed.
inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace opslicer::detail

#endif  // OPSLICER_SRC_CURSOR_HPP
