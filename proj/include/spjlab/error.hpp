#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spjlab/value.hpp"

namespace spjlab {

// Errors caused by the text a user typed. Each carries the pipeline stage
// that rejected the query and, where one exists, the offending position.
enum class ErrorKind { Lex, Parse, Bind };

std::string_view to_string(ErrorKind kind);

class QueryError : public std::runtime_error {
 public:
  QueryError(ErrorKind kind, std::optional<Position> position, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Position>& position() const noexcept { return position_; }
  // Message without the "line:column" prefix that what() carries.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<Position> position_;
  std::string detail_;
};

class LexError : public QueryError {
 public:
  LexError(Position position, const std::string& message)
      : QueryError(ErrorKind::Lex, position, message) {}
};

class ParseError : public QueryError {
 public:
  ParseError(Position position, std::string expected, std::string found);

  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

enum class BindErrorCode {
  UnknownRelation,
  UnknownColumn,
  AmbiguousColumn,
  DuplicateQualifier,
  TypeMismatch,
};

std::string_view to_string(BindErrorCode code);

class BindError : public QueryError {
 public:
  BindError(BindErrorCode code, std::optional<Position> position, const std::string& message)
      : QueryError(ErrorKind::Bind, position, message), code_(code) {}

  BindErrorCode code() const noexcept { return code_; }

 private:
  BindErrorCode code_;
};

// A node path that does not address a node of the expression.
class InvalidPath : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The bundled catalog violates one of its own invariants.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation would materialize more rows than the configured limit allows.
class ResultTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spjlab
