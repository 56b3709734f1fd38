#include <gtest/gtest.h>

#include "spjlab/error.hpp"
#include "spjlab/sql.hpp"

namespace spjlab {
namespace {

Position lex_error_at(std::string_view text) {
  try {
    tokenize(text);
  } catch (const LexError& e) {
    return *e.position();
  }
  ADD_FAILURE() << "no LexError for " << text;
  return {};
}

TEST(LexerTest, SimpleSelect) {
  const auto stream = tokenize("SELECT * FROM Doctor");
  const std::vector<Token> expected = {
      {TokenKind::Keyword, "SELECT", {1, 1}},
      {TokenKind::Symbol, "*", {1, 8}},
      {TokenKind::Keyword, "FROM", {1, 10}},
      {TokenKind::Identifier, "Doctor", {1, 15}},
  };
  EXPECT_EQ(stream.tokens, expected);
  EXPECT_EQ(stream.end, (Position{1, 21}));
}

TEST(LexerTest, DoubledQuoteEscapesQuote) {
  const auto stream = tokenize("WHERE name = 'O''Hara'");
  ASSERT_EQ(stream.tokens.size(), 4u);
  EXPECT_EQ(stream.tokens[3].kind, TokenKind::StringLiteral);
  EXPECT_EQ(stream.tokens[3].text, "O'Hara");
}

TEST(LexerTest, IllegalCharacter) { EXPECT_EQ(lex_error_at("SELECT @"), (Position{1, 8})); }

TEST(LexerTest, UnterminatedStringReportsItsStart) {
  EXPECT_EQ(lex_error_at("SELECT * FROM Doctor WHERE name = 'Ali"), (Position{1, 35}));
}

TEST(LexerTest, IntegerOutOfRange) {
  EXPECT_NO_THROW(tokenize("9223372036854775807"));
  EXPECT_EQ(lex_error_at("x = 9223372036854775808"), (Position{1, 5}));
}

TEST(LexerTest, KeywordsIgnoreCaseIdentifiersDoNot) {
  const auto stream = tokenize("select Name fRoM doctor");
  EXPECT_EQ(stream.tokens[0], (Token{TokenKind::Keyword, "SELECT", {1, 1}}));
  EXPECT_EQ(stream.tokens[1], (Token{TokenKind::Identifier, "Name", {1, 8}}));
  EXPECT_EQ(stream.tokens[2], (Token{TokenKind::Keyword, "FROM", {1, 13}}));
  EXPECT_EQ(stream.tokens[3], (Token{TokenKind::Identifier, "doctor", {1, 18}}));
}

TEST(LexerTest, ComparisonOperators) {
  const auto stream = tokenize("a<=b<>c>=d<e>f=g");
  std::vector<std::string> symbols;
  for (const auto& token : stream.tokens) {
    if (token.kind == TokenKind::Symbol) symbols.push_back(token.text);
  }
  EXPECT_EQ(symbols, (std::vector<std::string>{"<=", "<>", ">=", "<", ">", "="}));
}

TEST(LexerTest, PositionsAcrossLinesAndMultibyteText) {
  const auto stream = tokenize("SELECT\n  name\nFROM Doctor WHERE name = 'Zoë' AND id = 1");
  EXPECT_EQ(stream.tokens[1].position, (Position{2, 3}));
  EXPECT_EQ(stream.tokens[2].position, (Position{3, 1}));
  // 'Zoë' is five code points wide, six bytes.
  EXPECT_EQ(stream.tokens[8].text, "AND");
  EXPECT_EQ(stream.tokens[8].position, (Position{3, 32}));
  for (std::size_t i = 1; i < stream.tokens.size(); ++i) {
    EXPECT_LE(stream.tokens[i - 1].position, stream.tokens[i].position);
  }
}

TEST(LexerTest, NonAsciiOutsideStringsIsIllegal) {
  EXPECT_EQ(lex_error_at("SELECT é"), (Position{1, 8}));
  EXPECT_EQ(lex_error_at("a; b"), (Position{1, 2}));
}

}  // namespace
}  // namespace spjlab
