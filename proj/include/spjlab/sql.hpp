#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spjlab/predicate.hpp"
#include "spjlab/value.hpp"

namespace spjlab {

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

enum class TokenKind { Keyword, Identifier, IntegerLiteral, StringLiteral, Symbol };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  // Keywords are upper-cased; string literals hold their unescaped contents.
  std::string text;
  Position position;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenStream {
  std::vector<Token> tokens;
  // Position just past the last character of the input.
  Position end;
};

// Keywords (SELECT FROM WHERE JOIN ON AND OR NOT AS) match case-insensitively.
// Throws LexError on an illegal character, an unterminated string literal or
// an integer literal that does not fit in 64 bits.
TokenStream tokenize(std::string_view text);

bool is_keyword(std::string_view word);

// ---------------------------------------------------------------------------
// Syntax tree
// ---------------------------------------------------------------------------

struct TableRef {
  std::string relation;
  std::optional<std::string> alias;
  std::optional<Position> position;

  // The name columns of this table are qualified with: alias if present.
  const std::string& qualifier() const noexcept { return alias ? *alias : relation; }

  friend bool operator==(const TableRef& a, const TableRef& b) {
    return a.relation == b.relation && a.alias == b.alias;
  }
};

enum class JoinKind { InnerJoinOn, Comma };

struct JoinItem {
  JoinKind kind;
  TableRef table;
  std::optional<Predicate> on;  // set exactly when kind == InnerJoinOn

  friend bool operator==(const JoinItem&, const JoinItem&) = default;
};

struct FromClause {
  TableRef head;
  std::vector<JoinItem> joins;

  friend bool operator==(const FromClause&, const FromClause&) = default;
};

struct Star {
  friend bool operator==(const Star&, const Star&) = default;
};

using SelectList = std::variant<Star, std::vector<ColumnRef>>;

struct SqlQuery {
  SelectList select_list;
  FromClause from;
  std::optional<Predicate> where;

  friend bool operator==(const SqlQuery&, const SqlQuery&) = default;
};

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

// Parentheses may nest at most this deep inside one predicate.
inline constexpr int kMaxNestingDepth = 128;

// Throws LexError or ParseError; never anything else for any input.
SqlQuery parse(std::string_view text);

// Canonical single-line SQL. parse(to_sql(q)) == q for every parsed q.
std::string to_sql(const SqlQuery& query);

}  // namespace spjlab
