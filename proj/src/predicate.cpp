#include "spjlab/predicate.hpp"

namespace spjlab {

std::string ColumnRef::to_string() const {
  return qualifier ? *qualifier + "." + attribute : attribute;
}

std::optional<Position> position_of(const Operand& operand) {
  return std::visit([](const auto& o) { return o.position; }, operand);
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Eq:
      return "=";
    case CompareOp::Ne:
      return "<>";
    case CompareOp::Lt:
      return "<";
    case CompareOp::Le:
      return "<=";
    case CompareOp::Gt:
      return ">";
    case CompareOp::Ge:
      return ">=";
  }
  return "?";
}

Predicate Predicate::comparison(Operand left, CompareOp op, Operand right) {
  return Predicate(std::make_shared<const PredicateNode>(
      PredicateNode{Comparison{std::move(left), op, std::move(right)}}));
}

Predicate Predicate::conjunction(Predicate left, Predicate right) {
  return Predicate(
      std::make_shared<const PredicateNode>(PredicateNode{And{std::move(left), std::move(right)}}));
}

Predicate Predicate::disjunction(Predicate left, Predicate right) {
  return Predicate(
      std::make_shared<const PredicateNode>(PredicateNode{Or{std::move(left), std::move(right)}}));
}

Predicate Predicate::negation(Predicate operand) {
  return Predicate(std::make_shared<const PredicateNode>(PredicateNode{Not{std::move(operand)}}));
}

bool operator==(const Predicate& a, const Predicate& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

namespace {

// Binding strength; a subtree is parenthesized when it binds looser than its
// context requires.
enum Strength { kOr = 1, kAnd = 2, kNot = 3, kAtom = 4 };

std::string latex_identifier(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '_') out += '\\';
    out += c;
  }
  return out;
}

std::string latex_text(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '~':
        out += "\\textasciitilde{}";
        break;
      case '^':
        out += "\\textasciicircum{}";
        break;
      case '{':
      case '}':
      case '$':
      case '&':
      case '#':
      case '_':
      case '%':
        out += '\\';
        out += c;
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string_view op_text(CompareOp op, Notation notation) {
  if (notation == Notation::Latex) {
    switch (op) {
      case CompareOp::Ne:
        return "\\neq";
      case CompareOp::Le:
        return "\\leq";
      case CompareOp::Ge:
        return "\\geq";
      default:
        break;
    }
  } else if (notation == Notation::Unicode) {
    switch (op) {
      case CompareOp::Ne:
        return "≠";
      case CompareOp::Le:
        return "≤";
      case CompareOp::Ge:
        return "≥";
      default:
        break;
    }
  }
  return to_string(op);
}

struct Spelling {
  std::string_view and_op;
  std::string_view or_op;
  std::string_view not_op;
  bool not_always_parenthesized;
};

Spelling spelling_for(Notation notation) {
  switch (notation) {
    case Notation::Sql:
      return {" AND ", " OR ", "NOT ", false};
    case Notation::Unicode:
      return {" ∧ ", " ∨ ", "¬", true};
    case Notation::Latex:
      return {" \\land ", " \\lor ", "\\lnot ", true};
  }
  return {" AND ", " OR ", "NOT ", false};
}

std::string format(const Predicate& predicate, Notation notation, int required) {
  const Spelling spelling = spelling_for(notation);
  auto wrap = [&](int strength, std::string text) {
    return strength < required ? "(" + text + ")" : text;
  };
  return predicate.visit([&](const auto& node) -> std::string {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Comparison>) {
      return format_operand(node.left, notation) + " " + std::string(op_text(node.op, notation)) + " " +
             format_operand(node.right, notation);
    } else if constexpr (std::is_same_v<T, And>) {
      return wrap(kAnd, format(node.left, notation, kAnd) + std::string(spelling.and_op) +
                            format(node.right, notation, kNot));
    } else if constexpr (std::is_same_v<T, Or>) {
      return wrap(kOr, format(node.left, notation, kOr) + std::string(spelling.or_op) +
                           format(node.right, notation, kAnd));
    } else {
      // NOT applies to a comparison or a parenthesized predicate, never to a
      // bare NOT.
      const bool bare = !spelling.not_always_parenthesized && node.operand.template get_if<Comparison>();
      std::string inner = bare ? format(node.operand, notation, kAtom)
                               : "(" + format(node.operand, notation, 0) + ")";
      return wrap(kNot, std::string(spelling.not_op) + inner);
    }
  });
}

}  // namespace

std::string format_operand(const Operand& operand, Notation notation) {
  if (const auto* column = std::get_if<ColumnRef>(&operand)) {
    return notation == Notation::Latex ? latex_identifier(column->to_string()) : column->to_string();
  }
  const Value& value = std::get<Literal>(operand).value;
  if (notation == Notation::Latex && std::holds_alternative<std::string>(value)) {
    return "\\text{" + latex_text(to_sql_literal(value)) + "}";
  }
  return to_sql_literal(value);
}

std::string format_predicate(const Predicate& predicate, Notation notation) {
  return format(predicate, notation, 0);
}

}  // namespace spjlab
