#include "spjlab/value.hpp"

namespace spjlab {

std::string_view to_string(AttributeType type) {
  switch (type) {
    case AttributeType::Integer:
      return "Integer";
    case AttributeType::Text:
      return "Text";
  }
  return "?";
}

std::string to_display(const Value& value) {
  if (const auto* integer = std::get_if<std::int64_t>(&value)) return std::to_string(*integer);
  return std::get<std::string>(value);
}

std::string to_sql_literal(const Value& value) {
  if (const auto* integer = std::get_if<std::int64_t>(&value)) return std::to_string(*integer);
  std::string out = "'";
  for (char c : std::get<std::string>(value)) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

std::string to_string(const Position& position) {
  return std::to_string(position.line) + ":" + std::to_string(position.column);
}

}  // namespace spjlab
