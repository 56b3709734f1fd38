#include "spjlab/error.hpp"

namespace spjlab {
namespace {

std::string with_position(const std::optional<Position>& position, const std::string& message) {
  if (!position) return message;
  return to_string(*position) + ": " + message;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Lex:
      return "lex";
    case ErrorKind::Parse:
      return "parse";
    case ErrorKind::Bind:
      return "bind";
  }
  return "?";
}

std::string_view to_string(BindErrorCode code) {
  switch (code) {
    case BindErrorCode::UnknownRelation:
      return "UnknownRelation";
    case BindErrorCode::UnknownColumn:
      return "UnknownColumn";
    case BindErrorCode::AmbiguousColumn:
      return "AmbiguousColumn";
    case BindErrorCode::DuplicateQualifier:
      return "DuplicateQualifier";
    case BindErrorCode::TypeMismatch:
      return "TypeMismatch";
  }
  return "?";
}

QueryError::QueryError(ErrorKind kind, std::optional<Position> position, const std::string& message)
    : std::runtime_error(with_position(position, message)),
      kind_(kind),
      position_(position),
      detail_(message) {}

ParseError::ParseError(Position position, std::string expected, std::string found)
    : QueryError(ErrorKind::Parse, position, "expected " + expected + ", found " + found),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace spjlab
