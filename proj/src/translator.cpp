#include "spjlab/translator.hpp"

#include "spjlab/error.hpp"

namespace spjlab {
namespace {

BoundSchema bind_table(const TableRef& table, const Catalog& catalog) {
  const Table* found = catalog.find(table.relation);
  if (found == nullptr) {
    throw BindError(BindErrorCode::UnknownRelation, table.position, "unknown relation " + table.relation);
  }
  return bind_relation(found->schema, table.qualifier());
}

BoundSchema append_table(const BoundSchema& scope, const TableRef& table, const Catalog& catalog) {
  if (scope.has_qualifier(table.qualifier())) {
    throw BindError(BindErrorCode::DuplicateQualifier, table.position,
                    "table name or alias " + table.qualifier() + " is used more than once");
  }
  return concat_schemas(scope, bind_table(table, catalog));
}

RaExpr leaf(const TableRef& table) { return RaExpr::relation(table.relation, table.alias); }

}  // namespace

SqlQuery bind(const SqlQuery& query, const Catalog& catalog) {
  SqlQuery bound = query;
  BoundSchema scope = bind_table(query.from.head, catalog);
  for (auto& item : bound.from.joins) {
    scope = append_table(scope, item.table, catalog);
    if (item.on) item.on = bind_predicate(*item.on, scope);
  }
  if (bound.where) bound.where = bind_predicate(*bound.where, scope);
  if (auto* columns = std::get_if<std::vector<ColumnRef>>(&bound.select_list)) {
    for (std::size_t i = 0; i < columns->size(); ++i) {
      ColumnRef& ref = (*columns)[i];
      const BoundColumn& column = scope.columns[scope.resolve(ref)];
      ref.qualifier = column.qualifier;
      ref.attribute = column.attribute;
      for (std::size_t j = 0; j < i; ++j) {
        if ((*columns)[j] == ref) {
          throw BindError(BindErrorCode::AmbiguousColumn, ref.position,
                          "column " + ref.to_string() + " is selected more than once");
        }
      }
    }
  }
  return bound;
}

RaExpr translate(const SqlQuery& query, const Catalog& catalog) {
  const SqlQuery bound = bind(query, catalog);

  RaExpr expr = leaf(bound.from.head);
  for (const auto& item : bound.from.joins) {
    if (item.kind == JoinKind::InnerJoinOn) {
      expr = RaExpr::join(*item.on, std::move(expr), leaf(item.table));
    } else {
      expr = RaExpr::cross_product(std::move(expr), leaf(item.table));
    }
  }
  if (bound.where) expr = RaExpr::selection(*bound.where, std::move(expr));
  if (const auto* columns = std::get_if<std::vector<ColumnRef>>(&bound.select_list)) {
    expr = RaExpr::projection(*columns, std::move(expr));
  }
  return expr;
}

}  // namespace spjlab
