#include "spjlab/ra.hpp"

#include <charconv>

#include "spjlab/error.hpp"

namespace spjlab {

// ---------------------------------------------------------------------------
// NodePath

NodePath NodePath::child(std::size_t index) const {
  std::vector<std::size_t> indices = indices_;
  indices.push_back(index);
  return NodePath(std::move(indices));
}

std::string NodePath::to_dotted() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(indices_[i]);
  }
  return out;
}

NodePath NodePath::parse_dotted(std::string_view text) {
  std::vector<std::size_t> indices;
  if (text.empty()) return NodePath(std::move(indices));
  std::size_t begin = 0;
  while (true) {
    const std::size_t dot = text.find('.', begin);
    const std::string_view part = text.substr(begin, dot == std::string_view::npos ? dot : dot - begin);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InvalidPath("malformed node path '" + std::string(text) + "'");
    }
    indices.push_back(value);
    if (dot == std::string_view::npos) break;
    begin = dot + 1;
  }
  return NodePath(std::move(indices));
}

// ---------------------------------------------------------------------------
// RaExpr

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Relation:
      return "relation";
    case NodeKind::Selection:
      return "selection";
    case NodeKind::Projection:
      return "projection";
    case NodeKind::Join:
      return "join";
    case NodeKind::CrossProduct:
      return "cross_product";
  }
  return "?";
}

RaExpr RaExpr::relation(std::string name, std::optional<std::string> alias) {
  return RaExpr(std::make_shared<const RaNode>(RaNode{Relation{std::move(name), std::move(alias)}}));
}

RaExpr RaExpr::selection(Predicate predicate, RaExpr child) {
  return RaExpr(
      std::make_shared<const RaNode>(RaNode{Selection{std::move(predicate), std::move(child)}}));
}

RaExpr RaExpr::projection(std::vector<ColumnRef> columns, RaExpr child) {
  return RaExpr(
      std::make_shared<const RaNode>(RaNode{Projection{std::move(columns), std::move(child)}}));
}

RaExpr RaExpr::join(Predicate predicate, RaExpr left, RaExpr right) {
  return RaExpr(std::make_shared<const RaNode>(
      RaNode{Join{std::move(predicate), std::move(left), std::move(right)}}));
}

RaExpr RaExpr::cross_product(RaExpr left, RaExpr right) {
  return RaExpr(
      std::make_shared<const RaNode>(RaNode{CrossProduct{std::move(left), std::move(right)}}));
}

NodeKind RaExpr::kind() const noexcept { return static_cast<NodeKind>(node_->value.index()); }

std::size_t RaExpr::arity() const noexcept {
  switch (kind()) {
    case NodeKind::Relation:
      return 0;
    case NodeKind::Selection:
    case NodeKind::Projection:
      return 1;
    case NodeKind::Join:
    case NodeKind::CrossProduct:
      return 2;
  }
  return 0;
}

const RaExpr& RaExpr::child(std::size_t index) const {
  if (index >= arity()) {
    throw InvalidPath("child " + std::to_string(index) + " of a " + std::string(to_string(kind())) +
                      " node");
  }
  return visit([&](const auto& node) -> const RaExpr& {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Selection> || std::is_same_v<T, Projection>) {
      return node.child;
    } else if constexpr (std::is_same_v<T, Join> || std::is_same_v<T, CrossProduct>) {
      return index == 0 ? node.left : node.right;
    } else {
      return *this;  // unreachable: relations have no children
    }
  });
}

RaExpr RaExpr::with_child(std::size_t index, RaExpr replacement) const {
  child(index);  // range check
  auto node = node_->value;
  std::visit(
      [&](auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Selection> || std::is_same_v<T, Projection>) {
          n.child = std::move(replacement);
        } else if constexpr (std::is_same_v<T, Join> || std::is_same_v<T, CrossProduct>) {
          (index == 0 ? n.left : n.right) = std::move(replacement);
        }
      },
      node);
  return RaExpr(std::make_shared<const RaNode>(RaNode{std::move(node)}));
}

bool operator==(const RaExpr& a, const RaExpr& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

// ---------------------------------------------------------------------------
// Schemas

bool BoundSchema::has_qualifier(std::string_view qualifier) const {
  for (const auto& column : columns) {
    if (column.qualifier == qualifier) return true;
  }
  return false;
}

std::size_t BoundSchema::resolve(const ColumnRef& ref) const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const BoundColumn& column = columns[i];
    if (column.attribute != ref.attribute) continue;
    if (ref.qualifier && column.qualifier != *ref.qualifier) continue;
    if (found) {
      throw BindError(BindErrorCode::AmbiguousColumn, ref.position,
                      "column " + ref.to_string() + " is ambiguous (" + columns[*found].qualified_name() +
                          " or " + column.qualified_name() + ")");
    }
    found = i;
  }
  if (found) return *found;
  if (ref.qualifier && !has_qualifier(*ref.qualifier)) {
    throw BindError(BindErrorCode::UnknownColumn, ref.position,
                    "unknown column " + ref.to_string() + " (no table or alias named " + *ref.qualifier +
                        ")");
  }
  throw BindError(BindErrorCode::UnknownColumn, ref.position, "unknown column " + ref.to_string());
}

BoundSchema bind_relation(const Schema& schema, const std::string& qualifier) {
  BoundSchema bound;
  for (const auto& attribute : schema.attributes) {
    bound.columns.push_back({qualifier, attribute.name, attribute.type});
  }
  return bound;
}

BoundSchema concat_schemas(const BoundSchema& left, const BoundSchema& right) {
  for (const auto& column : right.columns) {
    if (left.has_qualifier(column.qualifier)) {
      throw BindError(BindErrorCode::DuplicateQualifier, std::nullopt,
                      "table name or alias " + column.qualifier + " is used more than once");
    }
  }
  BoundSchema out = left;
  out.columns.insert(out.columns.end(), right.columns.begin(), right.columns.end());
  return out;
}

namespace {

AttributeType operand_type(const Operand& operand, const BoundSchema& schema) {
  if (const auto* column = std::get_if<ColumnRef>(&operand)) {
    return schema.columns[schema.resolve(*column)].type;
  }
  return type_of(std::get<Literal>(operand).value);
}

void check_types(const Predicate& predicate, const BoundSchema& schema) {
  predicate.visit([&](const auto& node) {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Comparison>) {
      const AttributeType left = operand_type(node.left, schema);
      const AttributeType right = operand_type(node.right, schema);
      if (left != right) {
        throw BindError(BindErrorCode::TypeMismatch, position_of(node.left),
                        "cannot compare " + std::string(to_string(left)) + " " +
                            format_operand(node.left, Notation::Sql) + " with " +
                            std::string(to_string(right)) + " " + format_operand(node.right, Notation::Sql));
      }
    } else if constexpr (std::is_same_v<T, Not>) {
      check_types(node.operand, schema);
    } else {
      check_types(node.left, schema);
      check_types(node.right, schema);
    }
  });
}

ColumnRef qualified(const ColumnRef& ref, const BoundSchema& schema) {
  const BoundColumn& column = schema.columns[schema.resolve(ref)];
  return ColumnRef{column.qualifier, column.attribute, ref.position};
}

struct Bound {
  RaExpr expr;
  BoundSchema schema;
};

Bound bind_expr(const RaExpr& expr, const Catalog& catalog) {
  return expr.visit([&](const auto& node) -> Bound {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Relation>) {
      return {expr, bind_relation(catalog.relation_schema(node.name), node.qualifier())};
    } else if constexpr (std::is_same_v<T, Selection>) {
      Bound child = bind_expr(node.child, catalog);
      Predicate predicate = bind_predicate(node.predicate, child.schema);
      return {RaExpr::selection(std::move(predicate), std::move(child.expr)), std::move(child.schema)};
    } else if constexpr (std::is_same_v<T, Projection>) {
      Bound child = bind_expr(node.child, catalog);
      std::vector<ColumnRef> columns;
      BoundSchema schema;
      for (const auto& ref : node.columns) {
        ColumnRef column = qualified(ref, child.schema);
        for (const auto& seen : columns) {
          if (seen == column) {
            throw BindError(BindErrorCode::AmbiguousColumn, ref.position,
                            "column " + column.to_string() + " is projected more than once");
          }
        }
        schema.columns.push_back(child.schema.columns[child.schema.resolve(column)]);
        columns.push_back(std::move(column));
      }
      return {RaExpr::projection(std::move(columns), std::move(child.expr)), std::move(schema)};
    } else if constexpr (std::is_same_v<T, Join>) {
      Bound left = bind_expr(node.left, catalog);
      Bound right = bind_expr(node.right, catalog);
      BoundSchema schema = concat_schemas(left.schema, right.schema);
      Predicate predicate = bind_predicate(node.predicate, schema);
      return {RaExpr::join(std::move(predicate), std::move(left.expr), std::move(right.expr)),
              std::move(schema)};
    } else {
      Bound left = bind_expr(node.left, catalog);
      Bound right = bind_expr(node.right, catalog);
      BoundSchema schema = concat_schemas(left.schema, right.schema);
      return {RaExpr::cross_product(std::move(left.expr), std::move(right.expr)), std::move(schema)};
    }
  });
}

}  // namespace

Predicate bind_predicate(const Predicate& predicate, const BoundSchema& schema) {
  Predicate bound = map_columns(predicate, [&](const ColumnRef& ref) { return qualified(ref, schema); });
  check_types(bound, schema);
  return bound;
}

BoundSchema infer_schema(const RaExpr& expr, const Catalog& catalog) {
  return bind_expr(expr, catalog).schema;
}

RaExpr qualify(const RaExpr& expr, const Catalog& catalog) { return bind_expr(expr, catalog).expr; }

// ---------------------------------------------------------------------------
// Addressing

const RaExpr& node_at(const RaExpr& expr, const NodePath& path) {
  const RaExpr* node = &expr;
  for (std::size_t index : path.indices()) {
    if (index >= node->arity()) {
      throw InvalidPath("node path '" + path.to_dotted() + "' does not address a node");
    }
    node = &node->child(index);
  }
  return *node;
}

namespace {

RaExpr replace_from(const RaExpr& expr, const NodePath& path, std::size_t depth, RaExpr replacement) {
  if (depth == path.depth()) return replacement;
  const std::size_t index = path.indices()[depth];
  if (index >= expr.arity()) {
    throw InvalidPath("node path '" + path.to_dotted() + "' does not address a node");
  }
  return expr.with_child(index, replace_from(expr.child(index), path, depth + 1, std::move(replacement)));
}

void collect(const RaExpr& expr, NodePath path, std::vector<NodeEntry>& out) {
  out.push_back({path, expr.kind()});
  for (std::size_t i = 0; i < expr.arity(); ++i) collect(expr.child(i), path.child(i), out);
}

void collect_columns(const Predicate& predicate, std::set<QualifiedName>& out) {
  predicate.visit([&](const auto& node) {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Comparison>) {
      for (const Operand* operand : {&node.left, &node.right}) {
        if (const auto* column = std::get_if<ColumnRef>(operand)) {
          if (!column->qualifier) {
            throw std::logic_error("predicate_columns on unbound column " + column->attribute);
          }
          out.emplace(*column->qualifier, column->attribute);
        }
      }
    } else if constexpr (std::is_same_v<T, Not>) {
      collect_columns(node.operand, out);
    } else {
      collect_columns(node.left, out);
      collect_columns(node.right, out);
    }
  });
}

}  // namespace

RaExpr replace_at(const RaExpr& expr, const NodePath& path, RaExpr replacement) {
  return replace_from(expr, path, 0, std::move(replacement));
}

std::vector<NodeEntry> enumerate_nodes(const RaExpr& expr) {
  std::vector<NodeEntry> out;
  collect(expr, NodePath{}, out);
  return out;
}

std::size_t node_count(const RaExpr& expr) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < expr.arity(); ++i) count += node_count(expr.child(i));
  return count;
}

std::set<QualifiedName> predicate_columns(const Predicate& predicate) {
  std::set<QualifiedName> out;
  collect_columns(predicate, out);
  return out;
}

std::set<std::string> qualifiers(const RaExpr& expr) {
  std::set<std::string> out;
  if (const auto* relation = expr.get_if<Relation>()) {
    out.insert(relation->qualifier());
    return out;
  }
  for (std::size_t i = 0; i < expr.arity(); ++i) out.merge(qualifiers(expr.child(i)));
  return out;
}

}  // namespace spjlab
