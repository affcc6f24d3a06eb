#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dupforge/path.hpp"
#include "dupforge/value.hpp"

namespace dupforge {

enum class DataModel { Relational, Document };

std::string_view to_string(DataModel model);
std::optional<DataModel> data_model_from_string(std::string_view name);

enum class SemanticLabel {
  PersonName,
  Email,
  Phone,
  Date,
  AddressPart,
  Identifier,
  NumericMeasure,
  FreeText,
  Unknown,
};

std::string_view to_string(SemanticLabel label);
std::optional<SemanticLabel> semantic_label_from_string(std::string_view name);

struct SemanticType {
  SemanticLabel label = SemanticLabel::Unknown;
  double confidence = 0.0;  // fraction of the sample matching the winning pattern
};

struct AttributeDef {
  CellPath path;
  SemanticType semantic;
  ValueKind kind = ValueKind::Text;
  bool nullable = true;
};

enum class RelationshipKind { ForeignKey, Nesting };

struct Relationship {
  RelationshipKind kind = RelationshipKind::Nesting;
  CellPath from;
  CellPath to;
};

struct Schema {
  DataModel model = DataModel::Relational;
  std::vector<AttributeDef> attributes;
  std::vector<Relationship> relationships;

  const AttributeDef* find(const CellPath& path) const;
  std::vector<CellPath> paths() const;
};

struct Constraint {
  enum class Kind { Unique, FunctionalDependency, TemporalUnique };

  Kind kind = Kind::Unique;
  std::vector<CellPath> paths;  // Unique / TemporalUnique key paths
  std::vector<CellPath> lhs;    // FD determinant (may be empty: constant column)
  std::vector<CellPath> rhs;    // FD dependents

  std::string describe() const;
};

struct EnrichedSchema {
  Schema schema;
  std::vector<Constraint> constraints;
};

// --- serialization (shared by the enriched-schema and config files) -------

Value schema_to_value(const Schema& schema);
Schema schema_from_value(const Value& value);

Value constraint_to_value(const Constraint& constraint);
Constraint constraint_from_value(const Value& value);

Value enriched_schema_to_value(const EnrichedSchema& schema);
EnrichedSchema enriched_schema_from_value(const Value& value);

}  // namespace dupforge
