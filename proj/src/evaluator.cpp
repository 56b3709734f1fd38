#include "spjlab/evaluator.hpp"

#include <span>

#include "spjlab/error.hpp"

namespace spjlab {
namespace {

const Value& operand_value(const Operand& operand, const Row& row, const BoundSchema& schema) {
  if (const auto* column = std::get_if<ColumnRef>(&operand)) return row[schema.resolve(*column)];
  return std::get<Literal>(operand).value;
}

bool compare(const Value& left, CompareOp op, const Value& right) {
  switch (op) {
    case CompareOp::Eq:
      return left == right;
    case CompareOp::Ne:
      return left != right;
    case CompareOp::Lt:
      return left < right;
    case CompareOp::Le:
      return left <= right;
    case CompareOp::Gt:
      return left > right;
    case CompareOp::Ge:
      return left >= right;
  }
  return false;
}

void check_size(std::size_t rows, const EvalOptions& options) {
  if (rows > options.max_rows) {
    throw ResultTooLarge("an intermediate result would have " + std::to_string(rows) +
                         " rows; the limit is " + std::to_string(options.max_rows));
  }
}

std::vector<Row> nested_loop(const EvalTable& left, const EvalTable& right, const EvalOptions& options,
                             const Predicate* predicate, const BoundSchema& schema) {
  if (!right.rows.empty() && left.rows.size() > options.max_rows / right.rows.size()) {
    check_size(options.max_rows + 1, options);
  }
  std::vector<Row> rows;
  for (const Row& l : left.rows) {
    for (const Row& r : right.rows) {
      Row combined = l;
      combined.insert(combined.end(), r.begin(), r.end());
      if (predicate == nullptr || eval_predicate(*predicate, combined, schema)) {
        rows.push_back(std::move(combined));
      }
    }
  }
  check_size(rows.size(), options);
  return rows;
}

// Computes one node from its already-evaluated children.
EvalTable apply(const RaExpr& expr, std::span<const EvalTable* const> inputs, const Catalog& catalog,
                const EvalOptions& options) {
  return expr.visit([&](const auto& node) -> EvalTable {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Relation>) {
      const Table& table = catalog.scan(node.name);
      check_size(table.rows.size(), options);
      return {bind_relation(table.schema, node.qualifier()), table.rows};
    } else if constexpr (std::is_same_v<T, Selection>) {
      const EvalTable& child = *inputs[0];
      bind_predicate(node.predicate, child.schema);
      EvalTable out{child.schema, {}};
      for (const Row& row : child.rows) {
        if (eval_predicate(node.predicate, row, child.schema)) out.rows.push_back(row);
      }
      return out;
    } else if constexpr (std::is_same_v<T, Projection>) {
      const EvalTable& child = *inputs[0];
      std::vector<std::size_t> indices;
      EvalTable out;
      for (const auto& ref : node.columns) {
        const std::size_t index = child.schema.resolve(ref);
        for (std::size_t seen : indices) {
          if (seen == index) {
            throw BindError(BindErrorCode::AmbiguousColumn, ref.position,
                            "column " + ref.to_string() + " is projected more than once");
          }
        }
        indices.push_back(index);
        out.schema.columns.push_back(child.schema.columns[index]);
      }
      out.rows.reserve(child.rows.size());
      for (const Row& row : child.rows) {
        Row projected;
        projected.reserve(indices.size());
        for (std::size_t index : indices) projected.push_back(row[index]);
        out.rows.push_back(std::move(projected));
      }
      return out;
    } else if constexpr (std::is_same_v<T, Join>) {
      BoundSchema schema = concat_schemas(inputs[0]->schema, inputs[1]->schema);
      bind_predicate(node.predicate, schema);
      auto rows = nested_loop(*inputs[0], *inputs[1], options, &node.predicate, schema);
      return {std::move(schema), std::move(rows)};
    } else {
      BoundSchema schema = concat_schemas(inputs[0]->schema, inputs[1]->schema);
      auto rows = nested_loop(*inputs[0], *inputs[1], options, nullptr, schema);
      return {std::move(schema), std::move(rows)};
    }
  });
}

EvalTable evaluate_node(const RaExpr& expr, const Catalog& catalog, const EvalOptions& options,
                        EvalStats* stats) {
  std::vector<EvalTable> children;
  children.reserve(expr.arity());
  for (std::size_t i = 0; i < expr.arity(); ++i) {
    children.push_back(evaluate_node(expr.child(i), catalog, options, stats));
  }
  std::vector<const EvalTable*> inputs;
  for (const auto& child : children) inputs.push_back(&child);
  if (stats) ++stats->nodes_evaluated;
  return apply(expr, inputs, catalog, options);
}

// Fills `out[slot]` for `expr` and its subtree; slots follow pre-order.
void evaluate_into(const RaExpr& expr, NodePath path, const Catalog& catalog, const EvalOptions& options,
                   EvalStats* stats, std::vector<EvalResult>& out) {
  const std::size_t slot = out.size();
  out.push_back({path, {}});
  std::vector<std::size_t> child_slots;
  for (std::size_t i = 0; i < expr.arity(); ++i) {
    child_slots.push_back(out.size());
    evaluate_into(expr.child(i), path.child(i), catalog, options, stats, out);
  }
  std::vector<const EvalTable*> inputs;
  for (std::size_t child_slot : child_slots) inputs.push_back(&out[child_slot].table);
  if (stats) ++stats->nodes_evaluated;
  out[slot].table = apply(expr, inputs, catalog, options);
}

}  // namespace

bool eval_predicate(const Predicate& predicate, const Row& row, const BoundSchema& schema) {
  return predicate.visit([&](const auto& node) -> bool {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Comparison>) {
      return compare(operand_value(node.left, row, schema), node.op, operand_value(node.right, row, schema));
    } else if constexpr (std::is_same_v<T, And>) {
      return eval_predicate(node.left, row, schema) && eval_predicate(node.right, row, schema);
    } else if constexpr (std::is_same_v<T, Or>) {
      return eval_predicate(node.left, row, schema) || eval_predicate(node.right, row, schema);
    } else {
      return !eval_predicate(node.operand, row, schema);
    }
  });
}

EvalTable evaluate(const RaExpr& expr, const Catalog& catalog, const EvalOptions& options, EvalStats* stats) {
  return evaluate_node(expr, catalog, options, stats);
}

std::vector<EvalResult> evaluate_all(const RaExpr& expr, const Catalog& catalog, const EvalOptions& options,
                                     EvalStats* stats) {
  std::vector<EvalResult> out;
  out.reserve(node_count(expr));
  evaluate_into(expr, NodePath{}, catalog, options, stats, out);
  return out;
}

}  // namespace spjlab
