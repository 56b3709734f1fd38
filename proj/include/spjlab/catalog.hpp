#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spjlab/value.hpp"

namespace spjlab {

struct Attribute {
  std::string name;
  AttributeType type;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Schema {
  std::string relation_name;
  std::vector<Attribute> attributes;

  std::optional<std::size_t> index_of(std::string_view attribute) const;

  friend bool operator==(const Schema&, const Schema&) = default;
};

struct ForeignKey {
  std::string from_relation;
  std::string from_attribute;
  std::string to_relation;
  std::string to_attribute;

  friend bool operator==(const ForeignKey&, const ForeignKey&) = default;
};

struct Table {
  Schema schema;
  std::vector<Row> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

// Immutable set of named relations plus foreign-key metadata. The
// constructor checks every invariant and throws CatalogError on violation,
// so a Catalog value is always well formed.
class Catalog {
 public:
  Catalog(std::vector<Table> tables, std::vector<ForeignKey> foreign_keys);

  const std::map<std::string, Table, std::less<>>& relations() const noexcept { return relations_; }
  const std::vector<ForeignKey>& foreign_keys() const noexcept { return foreign_keys_; }

  const Table* find(std::string_view name) const;

  // Both throw BindError(UnknownRelation). Lookup is case-sensitive.
  const Schema& relation_schema(std::string_view name) const;
  const Table& scan(std::string_view name) const;

  // {relations: [{name, attributes: [{name, type}], rows}], foreign_keys: [...]}
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::map<std::string, Table, std::less<>> relations_;
  std::vector<ForeignKey> foreign_keys_;
};

// The bundled hospital dataset: Department, Doctor, Patient and the two
// foreign keys Doctor.departmentId -> Department.id, Patient.doctorId -> Doctor.id.
Catalog load_catalog();

nlohmann::ordered_json value_to_json(const Value& value);

}  // namespace spjlab
