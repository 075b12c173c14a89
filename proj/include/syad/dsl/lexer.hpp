#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "syad/errors.hpp"

namespace syad::dsl {

enum class TokenKind { Ident, Number, Keyword, Symbol };

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  int column = 1;
  double number = 0.0;  // filled for Number tokens

  SourcePos pos() const { return {line, column}; }
};

inline bool is_keyword(std::string_view word) {
  static constexpr std::array words{
      "universe", "set",   "on",    "rel",     "syadstate", "asti",
      "avaktavya", "time", "at",    "eval",    "infer",     "syad",
      "given",     "if",   "then",  "is",      "are",       "and",
      "or",        "not",  "implies", "o",     "very",      "most",
      "more-or-less", "not-very",
  };
  for (const char* w : words) {
    if (word == w) return true;
  }
  return false;
}

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace detail

/// Splits DSL source into tokens. Whitespace separates tokens; `#` starts a
/// comment running to end of line. Identifiers are ASCII alphanumerics plus
/// `_`; the hyphenated hedges `more-or-less` and `not-very` lex as single
/// keyword tokens. Numbers accept `0.5` and `.5` forms only. Positions are
/// 1-based line/column (column counted in bytes).
inline std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto advance = [&](std::size_t count) {
    i += count;
    column += static_cast<int>(count);
  };

  while (i < n) {
    const char c = source[i];
    if (c == '\n') {
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < n && source[i] != '\n') advance(1);
      continue;
    }

    const int tok_line = line;
    const int tok_col = column;

    if (detail::is_ident_start(c)) {
      std::size_t len = 1;
      while (i + len < n && detail::is_ident_char(source[i + len])) ++len;
      std::string_view word = source.substr(i, len);
      // "more" and "not" may extend into a hyphenated hedge keyword.
      for (std::string_view hedge : {"more-or-less", "not-very"}) {
        if (hedge.substr(0, len) == word && source.substr(i, hedge.size()) == hedge &&
            (i + hedge.size() >= n || !detail::is_ident_char(source[i + hedge.size()]))) {
          word = source.substr(i, hedge.size());
          len = hedge.size();
          break;
        }
      }
      tokens.push_back({is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident,
                        std::string(word), tok_line, tok_col});
      advance(len);
      continue;
    }

    if (detail::is_digit(c) || (c == '.' && i + 1 < n && detail::is_digit(source[i + 1]))) {
      std::size_t len = 0;
      while (i + len < n && detail::is_digit(source[i + len])) ++len;
      if (i + len < n && source[i + len] == '.' && i + len + 1 < n &&
          detail::is_digit(source[i + len + 1])) {
        ++len;
        while (i + len < n && detail::is_digit(source[i + len])) ++len;
      }
      std::string text(source.substr(i, len));
      Token tok{TokenKind::Number, text, tok_line, tok_col};
      tok.number = std::strtod(text.c_str(), nullptr);
      tokens.push_back(std::move(tok));
      advance(len);
      continue;
    }

    switch (c) {
      case '=': case '{': case '}': case ',': case '/':
      case '+': case '(': case ')': case ';': case ':':
        tokens.push_back({TokenKind::Symbol, std::string(1, c), tok_line, tok_col});
        advance(1);
        continue;
      default:
        break;
    }

    if (static_cast<unsigned char>(c) >= 0x80) {
      throw LexError("non-ASCII character outside a comment", {tok_line, tok_col});
    }
    throw LexError(std::string("unexpected character '") + c + "'", {tok_line, tok_col});
  }
  return tokens;
}

}  // namespace syad::dsl
