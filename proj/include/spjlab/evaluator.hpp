#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "spjlab/catalog.hpp"
#include "spjlab/ra.hpp"

namespace spjlab {

struct EvalTable {
  BoundSchema schema;
  std::vector<Row> rows;

  std::size_t cardinality() const noexcept { return rows.size(); }

  friend bool operator==(const EvalTable&, const EvalTable&) = default;
};

struct EvalResult {
  NodePath path;
  EvalTable table;

  std::size_t cardinality() const noexcept { return table.cardinality(); }
};

struct EvalOptions {
  // Any single node producing more rows than this aborts with ResultTooLarge.
  std::size_t max_rows = std::numeric_limits<std::size_t>::max();
};

struct EvalStats {
  std::size_t nodes_evaluated = 0;
};

// Bag semantics with a deterministic row order: scans in stored order,
// selections and projections keep order, cross products and joins are a
// left-major nested loop.
EvalTable evaluate(const RaExpr& expr, const Catalog& catalog, const EvalOptions& options = {},
                   EvalStats* stats = nullptr);

// One result per enumerate_nodes entry, same order. Each node is computed
// once, bottom-up, and its rows feed its parent.
std::vector<EvalResult> evaluate_all(const RaExpr& expr, const Catalog& catalog,
                                     const EvalOptions& options = {}, EvalStats* stats = nullptr);

// Two-valued. Integers compare numerically, texts by code point.
bool eval_predicate(const Predicate& predicate, const Row& row, const BoundSchema& schema);

}  // namespace spjlab
