#include "spjlab/error.hpp"
#include "spjlab/sql.hpp"

namespace spjlab {
namespace {

class Parser {
 public:
  explicit Parser(TokenStream stream) : stream_(std::move(stream)) {}

  SqlQuery parse_query() {
    expect_keyword("SELECT", "SELECT");
    SqlQuery query{parse_select_list(), FromClause{}, std::nullopt};
    expect_keyword("FROM", "',' or FROM");
    query.from = parse_from_list();
    if (accept_keyword("WHERE")) {
      query.where = parse_predicate();
      expect_end("AND, OR or end of input");
    } else {
      expect_end("',', JOIN, WHERE or end of input");
    }
    return query;
  }

 private:
  const Token* peek() const {
    return index_ < stream_.tokens.size() ? &stream_.tokens[index_] : nullptr;
  }

  Position here() const {
    const Token* token = peek();
    return token ? token->position : stream_.end;
  }

  std::string describe_current() const {
    const Token* token = peek();
    if (token == nullptr) return "end of input";
    switch (token->kind) {
      case TokenKind::Keyword:
        return "keyword " + token->text;
      case TokenKind::Identifier:
        return "identifier " + token->text;
      case TokenKind::IntegerLiteral:
        return "integer " + token->text;
      case TokenKind::StringLiteral:
        return "string " + to_sql_literal(token->text);
      case TokenKind::Symbol:
        return "'" + token->text + "'";
    }
    return "?";
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(here(), expected, describe_current());
  }

  bool check(TokenKind kind, std::string_view text = {}) const {
    const Token* token = peek();
    return token && token->kind == kind && (text.empty() || token->text == text);
  }

  bool accept_keyword(std::string_view keyword) {
    if (!check(TokenKind::Keyword, keyword)) return false;
    ++index_;
    return true;
  }

  bool accept_symbol(std::string_view symbol) {
    if (!check(TokenKind::Symbol, symbol)) return false;
    ++index_;
    return true;
  }

  void expect_keyword(std::string_view keyword, const std::string& expected) {
    if (!accept_keyword(keyword)) fail(expected);
  }

  void expect_end(const std::string& expected) const {
    if (peek() != nullptr) fail(expected);
  }

  const Token& expect_identifier(const std::string& expected) {
    if (!check(TokenKind::Identifier)) fail(expected);
    return stream_.tokens[index_++];
  }

  SelectList parse_select_list() {
    if (accept_symbol("*")) return Star{};
    std::vector<ColumnRef> columns;
    columns.push_back(parse_column_ref("select item"));
    while (accept_symbol(",")) columns.push_back(parse_column_ref("select item"));
    return columns;
  }

  ColumnRef parse_column_ref(const std::string& expected) {
    const Token& first = expect_identifier(expected);
    if (accept_symbol(".")) {
      const Token& second = expect_identifier("column name");
      return ColumnRef{first.text, second.text, first.position};
    }
    return ColumnRef{std::nullopt, first.text, first.position};
  }

  TableRef parse_table_ref() {
    const Token& name = expect_identifier("table name");
    TableRef ref{name.text, std::nullopt, name.position};
    if (accept_keyword("AS")) ref.alias = expect_identifier("alias").text;
    return ref;
  }

  FromClause parse_from_list() {
    FromClause from{parse_table_ref(), {}};
    while (true) {
      if (accept_symbol(",")) {
        from.joins.push_back({JoinKind::Comma, parse_table_ref(), std::nullopt});
      } else if (accept_keyword("JOIN")) {
        TableRef table = parse_table_ref();
        expect_keyword("ON", "ON");
        from.joins.push_back({JoinKind::InnerJoinOn, std::move(table), parse_predicate()});
      } else {
        return from;
      }
    }
  }

  Predicate parse_predicate() {
    Predicate left = parse_and();
    while (accept_keyword("OR")) left = Predicate::disjunction(std::move(left), parse_and());
    return left;
  }

  Predicate parse_and() {
    Predicate left = parse_not();
    while (accept_keyword("AND")) left = Predicate::conjunction(std::move(left), parse_not());
    return left;
  }

  Predicate parse_not() {
    if (accept_keyword("NOT")) return Predicate::negation(parse_primary());
    return parse_primary();
  }

  Predicate parse_primary() {
    if (check(TokenKind::Symbol, "(")) {
      if (depth_ >= kMaxNestingDepth) {
        throw ParseError(here(), "at most " + std::to_string(kMaxNestingDepth) + " nested parentheses",
                         "deeper nesting");
      }
      ++index_;
      ++depth_;
      Predicate inner = parse_predicate();
      if (!accept_symbol(")")) fail("')'");
      --depth_;
      return inner;
    }
    Operand left = parse_operand("operand or '('");
    const CompareOp op = parse_compare_op();
    Operand right = parse_operand("operand");
    return Predicate::comparison(std::move(left), op, std::move(right));
  }

  CompareOp parse_compare_op() {
    static const std::pair<std::string_view, CompareOp> kOps[] = {
        {"=", CompareOp::Eq}, {"<>", CompareOp::Ne}, {"<", CompareOp::Lt},
        {"<=", CompareOp::Le}, {">", CompareOp::Gt}, {">=", CompareOp::Ge}};
    for (const auto& [text, op] : kOps) {
      if (accept_symbol(text)) return op;
    }
    fail("comparison operator");
  }

  Operand parse_operand(const std::string& expected) {
    const Token* token = peek();
    if (token == nullptr) fail(expected);
    switch (token->kind) {
      case TokenKind::Identifier:
        return parse_column_ref(expected);
      case TokenKind::IntegerLiteral:
        ++index_;
        return Literal{std::stoll(token->text), token->position};
      case TokenKind::StringLiteral:
        ++index_;
        return Literal{token->text, token->position};
      default:
        fail(expected);
    }
  }

  TokenStream stream_;
  std::size_t index_ = 0;
  int depth_ = 0;
};

}  // namespace

SqlQuery parse(std::string_view text) { return Parser(tokenize(text)).parse_query(); }

}  // namespace spjlab
