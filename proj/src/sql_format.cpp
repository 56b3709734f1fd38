#include "spjlab/sql.hpp"

namespace spjlab {
namespace {

std::string table_ref_sql(const TableRef& ref) {
  return ref.alias ? ref.relation + " AS " + *ref.alias : ref.relation;
}

}  // namespace

std::string to_sql(const SqlQuery& query) {
  std::string out = "SELECT ";
  if (const auto* columns = std::get_if<std::vector<ColumnRef>>(&query.select_list)) {
    for (std::size_t i = 0; i < columns->size(); ++i) {
      if (i > 0) out += ", ";
      out += (*columns)[i].to_string();
    }
  } else {
    out += "*";
  }
  out += " FROM " + table_ref_sql(query.from.head);
  for (const auto& item : query.from.joins) {
    if (item.kind == JoinKind::Comma) {
      out += ", " + table_ref_sql(item.table);
    } else {
      out += " JOIN " + table_ref_sql(item.table) + " ON " + format_predicate(*item.on, Notation::Sql);
    }
  }
  if (query.where) out += " WHERE " + format_predicate(*query.where, Notation::Sql);
  return out;
}

}  // namespace spjlab
