#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "spjlab/evaluator.hpp"
#include "spjlab/ra.hpp"

namespace spjlab {

// Linear forms. Binary operators are left-associative; a binary right operand
// is parenthesized, so distinct trees always print differently.
std::string to_unicode(const RaExpr& expr);
std::string to_latex(const RaExpr& expr);

// Operator with its subscript, e.g. "σ Doctor.departmentId = 1" or "Doctor".
std::string node_label(const RaExpr& node);

// {kind, label, path, cardinality?, children}. `results` must come from
// evaluate_all on the same expression.
nlohmann::ordered_json to_tree_json(const RaExpr& expr,
                                    std::optional<std::span<const EvalResult>> results = std::nullopt);

struct TreeTextOptions {
  bool color = false;
};

// Indented text, one node per line with its path and, when results are
// given, its row count.
std::string to_tree_text(const RaExpr& expr,
                         std::optional<std::span<const EvalResult>> results = std::nullopt,
                         const TreeTextOptions& options = {});

// Schema header plus aligned rows; integers right-aligned, texts left.
std::string to_table_text(const EvalTable& table);

nlohmann::ordered_json schema_to_json(const BoundSchema& schema);
nlohmann::ordered_json rows_to_json(const std::vector<Row>& rows);

}  // namespace spjlab
