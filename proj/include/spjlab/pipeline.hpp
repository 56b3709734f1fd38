#pragma once

#include <string_view>
#include <vector>

#include "spjlab/evaluator.hpp"
#include "spjlab/optimizer.hpp"
#include "spjlab/ra.hpp"
#include "spjlab/sql.hpp"

namespace spjlab {

// Everything the front ends show for one query.
struct QueryRun {
  SqlQuery query;
  RaExpr canonical;   // translation before optimization
  RaExpr expr;        // what was evaluated: optimized or canonical
  RewriteTrace trace; // empty unless optimized
  std::vector<EvalResult> results;
};

// parse -> translate -> [optimize] -> evaluate_all. Throws QueryError
// subclasses for user errors and ResultTooLarge.
QueryRun run_query(std::string_view sql, const Catalog& catalog, bool optimize,
                   const EvalOptions& options = {});

}  // namespace spjlab
