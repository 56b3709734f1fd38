#pragma once

#include "spjlab/catalog.hpp"
#include "spjlab/ra.hpp"
#include "spjlab/sql.hpp"

namespace spjlab {

// Qualifies every column reference in `query`. ON conditions see the tables
// joined so far; WHERE and the select list see the whole FROM clause.
// Throws BindError.
SqlQuery bind(const SqlQuery& query, const Catalog& catalog);

// Canonical, unoptimized translation:
//   FROM items fold left to right (JOIN..ON -> Join, comma -> CrossProduct),
//   WHERE becomes one Selection above them, the select list one Projection
//   on top (none for *). The result is fully qualified. Throws BindError.
RaExpr translate(const SqlQuery& query, const Catalog& catalog);

}  // namespace spjlab
