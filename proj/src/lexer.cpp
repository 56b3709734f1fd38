#include <array>
#include <charconv>
#include <cstdio>

#include "spjlab/error.hpp"
#include "spjlab/sql.hpp"

namespace spjlab {
namespace {

constexpr std::array<std::string_view, 9> kKeywords = {"SELECT", "FROM", "WHERE", "JOIN", "ON",
                                                       "AND",    "OR",   "NOT",   "AS"};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string upper(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::string describe_char(char c) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte >= 0x20 && byte < 0x7f) return std::string("'") + c + "'";
  char buffer[8];
  std::snprintf(buffer, sizeof buffer, "0x%02X", byte);
  return buffer;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  TokenStream run() {
    TokenStream stream;
    while (true) {
      skip_whitespace();
      if (at_end()) break;
      stream.tokens.push_back(next());
    }
    stream.end = position_;
    return stream;
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
  }

  char advance() {
    const char c = text_[offset_++];
    if (c == '\n') {
      ++position_.line;
      position_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // UTF-8 continuation bytes belong to the previous code point.
      ++position_.column;
    }
    return c;
  }

  void skip_whitespace() {
    while (!at_end()) {
      const char c = peek();
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') break;
      advance();
    }
  }

  Token next() {
    const Position start = position_;
    const char c = peek();

    if (is_ident_start(c)) {
      const std::size_t begin = offset_;
      while (!at_end() && is_ident_char(peek())) advance();
      const std::string_view word = text_.substr(begin, offset_ - begin);
      if (is_keyword(word)) return {TokenKind::Keyword, upper(word), start};
      return {TokenKind::Identifier, std::string(word), start};
    }

    if (is_digit(c)) {
      const std::size_t begin = offset_;
      while (!at_end() && is_digit(peek())) advance();
      const std::string_view digits = text_.substr(begin, offset_ - begin);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw LexError(start, "integer literal " + std::string(digits) + " is out of range");
      }
      return {TokenKind::IntegerLiteral, std::string(digits), start};
    }

    if (c == '\'') {
      advance();
      std::string contents;
      while (true) {
        if (at_end()) throw LexError(start, "unterminated string literal");
        const char d = advance();
        if (d == '\'') {
          if (peek() != '\'') break;
          advance();
        }
        contents += d;
      }
      return {TokenKind::StringLiteral, std::move(contents), start};
    }

    switch (c) {
      case '*':
      case ',':
      case '.':
      case '(':
      case ')':
      case '=':
        advance();
        return {TokenKind::Symbol, std::string(1, c), start};
      case '<':
        advance();
        if (peek() == '=' || peek() == '>') return {TokenKind::Symbol, std::string{c, advance()}, start};
        return {TokenKind::Symbol, "<", start};
      case '>':
        advance();
        if (peek() == '=') return {TokenKind::Symbol, std::string{c, advance()}, start};
        return {TokenKind::Symbol, ">", start};
      default:
        throw LexError(start, "illegal character " + describe_char(c));
    }
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  Position position_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword:
      return "keyword";
    case TokenKind::Identifier:
      return "identifier";
    case TokenKind::IntegerLiteral:
      return "integer";
    case TokenKind::StringLiteral:
      return "string";
    case TokenKind::Symbol:
      return "symbol";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  const std::string up = upper(word);
  for (auto keyword : kKeywords) {
    if (keyword == up) return true;
  }
  return false;
}

TokenStream tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace spjlab
