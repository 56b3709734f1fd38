#include "spjlab/catalog.hpp"

#include <algorithm>
#include <set>

#include "spjlab/error.hpp"

namespace spjlab {

std::optional<std::size_t> Schema::index_of(std::string_view attribute) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attribute) return i;
  }
  return std::nullopt;
}

Catalog::Catalog(std::vector<Table> tables, std::vector<ForeignKey> foreign_keys)
    : foreign_keys_(std::move(foreign_keys)) {
  for (auto& table : tables) {
    const Schema& schema = table.schema;
    std::set<std::string_view> names;
    for (const auto& attribute : schema.attributes) {
      if (!names.insert(attribute.name).second) {
        throw CatalogError("relation " + schema.relation_name + " repeats attribute " +
                           attribute.name);
      }
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const Row& row = table.rows[r];
      if (row.size() != schema.attributes.size()) {
        throw CatalogError("relation " + schema.relation_name + " row " + std::to_string(r) +
                           " has the wrong number of values");
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (type_of(row[c]) != schema.attributes[c].type) {
          throw CatalogError("relation " + schema.relation_name + " row " + std::to_string(r) +
                             " has a mistyped value for " + schema.attributes[c].name);
        }
      }
    }
    std::string name = schema.relation_name;
    if (!relations_.emplace(name, std::move(table)).second) {
      throw CatalogError("duplicate relation " + name);
    }
  }

  for (const auto& fk : foreign_keys_) {
    const std::string label =
        fk.from_relation + "." + fk.from_attribute + " -> " + fk.to_relation + "." + fk.to_attribute;
    const Table* from = find(fk.from_relation);
    const Table* to = find(fk.to_relation);
    if (from == nullptr || to == nullptr) throw CatalogError("foreign key " + label + " names a missing relation");
    auto from_index = from->schema.index_of(fk.from_attribute);
    auto to_index = to->schema.index_of(fk.to_attribute);
    if (!from_index || !to_index) throw CatalogError("foreign key " + label + " names a missing attribute");

    std::set<Value> targets;
    for (const auto& row : to->rows) targets.insert(row[*to_index]);
    for (const auto& row : from->rows) {
      if (!targets.contains(row[*from_index])) {
        throw CatalogError("foreign key " + label + " is violated by value " +
                           to_display(row[*from_index]));
      }
    }
  }
}

const Table* Catalog::find(std::string_view name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const Schema& Catalog::relation_schema(std::string_view name) const { return scan(name).schema; }

const Table& Catalog::scan(std::string_view name) const {
  if (const Table* table = find(name)) return *table;
  throw BindError(BindErrorCode::UnknownRelation, std::nullopt,
                  "unknown relation " + std::string(name));
}

nlohmann::ordered_json value_to_json(const Value& value) {
  if (const auto* integer = std::get_if<std::int64_t>(&value)) return *integer;
  return std::get<std::string>(value);
}

nlohmann::ordered_json Catalog::to_json() const {
  using nlohmann::ordered_json;
  ordered_json relations = ordered_json::array();
  for (const auto& [name, table] : relations_) {
    ordered_json attributes = ordered_json::array();
    for (const auto& attribute : table.schema.attributes) {
      attributes.push_back({{"name", attribute.name}, {"type", to_string(attribute.type)}});
    }
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json cells = ordered_json::array();
      for (const auto& value : row) cells.push_back(value_to_json(value));
      rows.push_back(std::move(cells));
    }
    relations.push_back({{"name", name}, {"attributes", std::move(attributes)}, {"rows", std::move(rows)}});
  }
  ordered_json fks = ordered_json::array();
  for (const auto& fk : foreign_keys_) {
    fks.push_back({{"from_relation", fk.from_relation},
                   {"from_attribute", fk.from_attribute},
                   {"to_relation", fk.to_relation},
                   {"to_attribute", fk.to_attribute}});
  }
  return {{"relations", std::move(relations)}, {"foreign_keys", std::move(fks)}};
}

Catalog load_catalog() {
  using T = AttributeType;
  auto row = [](std::int64_t id, std::string name) { return Row{id, std::move(name)}; };
  auto row3 = [](std::int64_t id, std::string name, std::int64_t ref) {
    return Row{id, std::move(name), ref};
  };

  std::vector<Table> tables;
  tables.push_back({{"Department", {{"id", T::Integer}, {"name", T::Text}}},
                    {row(1, "Cardiology"), row(2, "Neurology"), row(3, "Oncology")}});
  tables.push_back({{"Doctor", {{"id", T::Integer}, {"name", T::Text}, {"departmentId", T::Integer}}},
                    {row3(10, "Alice", 1), row3(11, "Bob", 1), row3(12, "Carol", 2)}});
  tables.push_back({{"Patient", {{"id", T::Integer}, {"name", T::Text}, {"doctorId", T::Integer}}},
                    {row3(100, "Dan", 10), row3(101, "Eve", 10), row3(102, "Fay", 12),
                     row3(103, "Gus", 11)}});

  return Catalog(std::move(tables), {{"Doctor", "departmentId", "Department", "id"},
                                     {"Patient", "doctorId", "Doctor", "id"}});
}

}  // namespace spjlab
