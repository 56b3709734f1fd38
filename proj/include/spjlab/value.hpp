#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spjlab {

enum class AttributeType { Integer, Text };

std::string_view to_string(AttributeType type);

// Scalar cell value. There is no NULL: every cell holds an integer or a text.
using Value = std::variant<std::int64_t, std::string>;
using Row = std::vector<Value>;

inline AttributeType type_of(const Value& value) {
  return std::holds_alternative<std::int64_t>(value) ? AttributeType::Integer
                                                     : AttributeType::Text;
}

// Integers print as decimal, texts verbatim (no quoting).
std::string to_display(const Value& value);

// SQL literal spelling: integers as decimal, texts single-quoted with '' escapes.
std::string to_sql_literal(const Value& value);

// 1-based source location. Columns count code points, not bytes.
struct Position {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& position);

}  // namespace spjlab
