#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "spjlab/value.hpp"

namespace spjlab {

// [qualifier.]attribute. Source positions are diagnostics only and never
// take part in equality.
struct ColumnRef {
  std::optional<std::string> qualifier;
  std::string attribute;
  std::optional<Position> position;

  bool is_qualified() const noexcept { return qualifier.has_value(); }
  std::string to_string() const;

  friend bool operator==(const ColumnRef& a, const ColumnRef& b) {
    return a.qualifier == b.qualifier && a.attribute == b.attribute;
  }
};

struct Literal {
  Value value;
  std::optional<Position> position;

  friend bool operator==(const Literal& a, const Literal& b) { return a.value == b.value; }
};

using Operand = std::variant<ColumnRef, Literal>;

std::optional<Position> position_of(const Operand& operand);

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CompareOp op);

struct PredicateNode;

// Immutable boolean expression tree: Comparison | And | Or | Not. Copies
// share structure; equality is structural.
class Predicate {
 public:
  static Predicate comparison(Operand left, CompareOp op, Operand right);
  static Predicate conjunction(Predicate left, Predicate right);
  static Predicate disjunction(Predicate left, Predicate right);
  static Predicate negation(Predicate operand);

  const PredicateNode& node() const noexcept { return *node_; }

  template <class T>
  const T* get_if() const noexcept;

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const;

  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  explicit Predicate(std::shared_ptr<const PredicateNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const PredicateNode> node_;
};

struct Comparison {
  Operand left;
  CompareOp op;
  Operand right;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct And {
  Predicate left;
  Predicate right;

  friend bool operator==(const And&, const And&) = default;
};

struct Or {
  Predicate left;
  Predicate right;

  friend bool operator==(const Or&, const Or&) = default;
};

struct Not {
  Predicate operand;

  friend bool operator==(const Not&, const Not&) = default;
};

struct PredicateNode {
  std::variant<Comparison, And, Or, Not> value;
};

template <class T>
const T* Predicate::get_if() const noexcept {
  return std::get_if<T>(&node_->value);
}

template <class Visitor>
decltype(auto) Predicate::visit(Visitor&& visitor) const {
  return std::visit(std::forward<Visitor>(visitor), node_->value);
}

// How predicates are spelled. All three use the same precedence
// (NOT > AND > OR) and add only the parentheses that precedence and
// left-associativity require, so the output reparses to the same tree.
enum class Notation { Sql, Unicode, Latex };

std::string format_predicate(const Predicate& predicate, Notation notation);
std::string format_operand(const Operand& operand, Notation notation);

// Rewrites every ColumnRef through `map`; the tree shape is preserved.
template <class Fn>
Predicate map_columns(const Predicate& predicate, Fn&& map);

template <class Fn>
Predicate map_columns(const Predicate& predicate, Fn&& map) {
  auto map_operand = [&](const Operand& operand) -> Operand {
    if (const auto* column = std::get_if<ColumnRef>(&operand)) return map(*column);
    return operand;
  };
  return predicate.visit([&](const auto& node) -> Predicate {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Comparison>) {
      return Predicate::comparison(map_operand(node.left), node.op, map_operand(node.right));
    } else if constexpr (std::is_same_v<T, And>) {
      return Predicate::conjunction(map_columns(node.left, map), map_columns(node.right, map));
    } else if constexpr (std::is_same_v<T, Or>) {
      return Predicate::disjunction(map_columns(node.left, map), map_columns(node.right, map));
    } else {
      return Predicate::negation(map_columns(node.operand, map));
    }
  });
}

}  // namespace spjlab
