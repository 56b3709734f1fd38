#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spjlab/catalog.hpp"
#include "spjlab/predicate.hpp"

namespace spjlab {

// Positional address of a subexpression: child indices from the root.
// The empty path is the root.
class NodePath {
 public:
  NodePath() = default;
  NodePath(std::initializer_list<std::size_t> indices) : indices_(indices) {}
  explicit NodePath(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  bool is_root() const noexcept { return indices_.empty(); }
  std::size_t depth() const noexcept { return indices_.size(); }

  NodePath child(std::size_t index) const;

  // "0.1"; the root is the empty string.
  std::string to_dotted() const;
  // Inverse of to_dotted. Throws InvalidPath on malformed text.
  static NodePath parse_dotted(std::string_view text);

  friend auto operator<=>(const NodePath&, const NodePath&) = default;

 private:
  std::vector<std::size_t> indices_;
};

enum class NodeKind { Relation, Selection, Projection, Join, CrossProduct };

std::string_view to_string(NodeKind kind);

struct RaNode;

// Immutable relational algebra tree. Copies share structure; equality is
// structural.
class RaExpr {
 public:
  static RaExpr relation(std::string name, std::optional<std::string> alias = std::nullopt);
  static RaExpr selection(Predicate predicate, RaExpr child);
  static RaExpr projection(std::vector<ColumnRef> columns, RaExpr child);
  static RaExpr join(Predicate predicate, RaExpr left, RaExpr right);
  static RaExpr cross_product(RaExpr left, RaExpr right);

  const RaNode& node() const noexcept { return *node_; }
  NodeKind kind() const noexcept;
  std::size_t arity() const noexcept;
  const RaExpr& child(std::size_t index) const;

  // Same node with child `index` replaced.
  RaExpr with_child(std::size_t index, RaExpr replacement) const;

  template <class T>
  const T* get_if() const noexcept;

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const;

  friend bool operator==(const RaExpr& a, const RaExpr& b);

 private:
  explicit RaExpr(std::shared_ptr<const RaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const RaNode> node_;
};

struct Relation {
  std::string name;
  std::optional<std::string> alias;

  const std::string& qualifier() const noexcept { return alias ? *alias : name; }

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Selection {
  Predicate predicate;
  RaExpr child;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct Projection {
  std::vector<ColumnRef> columns;
  RaExpr child;

  friend bool operator==(const Projection&, const Projection&) = default;
};

struct Join {
  Predicate predicate;
  RaExpr left;
  RaExpr right;

  friend bool operator==(const Join&, const Join&) = default;
};

struct CrossProduct {
  RaExpr left;
  RaExpr right;

  friend bool operator==(const CrossProduct&, const CrossProduct&) = default;
};

struct RaNode {
  std::variant<Relation, Selection, Projection, Join, CrossProduct> value;
};

template <class T>
const T* RaExpr::get_if() const noexcept {
  return std::get_if<T>(&node_->value);
}

template <class Visitor>
decltype(auto) RaExpr::visit(Visitor&& visitor) const {
  return std::visit(std::forward<Visitor>(visitor), node_->value);
}

// ---------------------------------------------------------------------------
// Schemas and name resolution
// ---------------------------------------------------------------------------

struct BoundColumn {
  std::string qualifier;
  std::string attribute;
  AttributeType type;

  std::string qualified_name() const { return qualifier + "." + attribute; }

  friend bool operator==(const BoundColumn&, const BoundColumn&) = default;
};

// Output columns of a subexpression, each tagged with the alias (or relation
// name) it is reachable through. (qualifier, attribute) pairs are unique.
struct BoundSchema {
  std::vector<BoundColumn> columns;

  std::size_t size() const noexcept { return columns.size(); }
  bool has_qualifier(std::string_view qualifier) const;

  // Index of the single column `ref` names. Throws BindError with
  // UnknownColumn or AmbiguousColumn.
  std::size_t resolve(const ColumnRef& ref) const;

  friend bool operator==(const BoundSchema&, const BoundSchema&) = default;
};

// Schema of a base relation as seen through `qualifier`.
BoundSchema bind_relation(const Schema& schema, const std::string& qualifier);

// Left columns followed by right columns. Throws DuplicateQualifier when the
// two sides share a qualifier.
BoundSchema concat_schemas(const BoundSchema& left, const BoundSchema& right);

// Returns `predicate` with every column reference qualified against `schema`.
// Throws UnknownColumn / AmbiguousColumn / TypeMismatch.
Predicate bind_predicate(const Predicate& predicate, const BoundSchema& schema);

// Static output schema of `expr`. Validates every reference on the way.
BoundSchema infer_schema(const RaExpr& expr, const Catalog& catalog);

// `expr` with every column reference fully qualified; same shape and schema.
RaExpr qualify(const RaExpr& expr, const Catalog& catalog);

// ---------------------------------------------------------------------------
// Addressing
// ---------------------------------------------------------------------------

// Throws InvalidPath if an index is out of range for the node it indexes.
const RaExpr& node_at(const RaExpr& expr, const NodePath& path);

// `expr` with the subtree at `path` replaced. Throws InvalidPath.
RaExpr replace_at(const RaExpr& expr, const NodePath& path, RaExpr replacement);

struct NodeEntry {
  NodePath path;
  NodeKind kind;

  friend bool operator==(const NodeEntry&, const NodeEntry&) = default;
};

// Pre-order: parent before children, left before right.
std::vector<NodeEntry> enumerate_nodes(const RaExpr& expr);

std::size_t node_count(const RaExpr& expr);

using QualifiedName = std::pair<std::string, std::string>;

// Column references of a bound predicate. Throws std::logic_error on an
// unqualified reference.
std::set<QualifiedName> predicate_columns(const Predicate& predicate);

// Qualifiers introduced by the Relation leaves under `expr`.
std::set<std::string> qualifiers(const RaExpr& expr);

}  // namespace spjlab
