#include "spjlab/pipeline.hpp"

#include "spjlab/translator.hpp"

namespace spjlab {

QueryRun run_query(std::string_view sql, const Catalog& catalog, bool optimize_plan,
                   const EvalOptions& options) {
  SqlQuery query = parse(sql);
  RaExpr canonical = translate(query, catalog);
  RaExpr expr = canonical;
  RewriteTrace trace;
  if (optimize_plan) {
    Rewritten rewritten = optimize(canonical);
    expr = std::move(rewritten.expr);
    trace = std::move(rewritten.trace);
  }
  auto results = evaluate_all(expr, catalog, options);
  return {std::move(query), std::move(canonical), std::move(expr), std::move(trace), std::move(results)};
}

}  // namespace spjlab
