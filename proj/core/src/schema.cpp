#include "dupforge/schema.hpp"

#include "dupforge/serde.hpp"

namespace dupforge {

std::string_view to_string(DataModel model) {
  return model == DataModel::Relational ? "relational" : "document";
}

std::optional<DataModel> data_model_from_string(std::string_view name) {
  if (name == "relational") return DataModel::Relational;
  if (name == "document") return DataModel::Document;
  return std::nullopt;
}

std::string_view to_string(SemanticLabel label) {
  switch (label) {
    case SemanticLabel::PersonName: return "person-name";
    case SemanticLabel::Email: return "email";
    case SemanticLabel::Phone: return "phone";
    case SemanticLabel::Date: return "date";
    case SemanticLabel::AddressPart: return "address-part";
    case SemanticLabel::Identifier: return "identifier";
    case SemanticLabel::NumericMeasure: return "numeric-measure";
    case SemanticLabel::FreeText: return "free-text";
    case SemanticLabel::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<SemanticLabel> semantic_label_from_string(std::string_view name) {
  if (name == "person-name") return SemanticLabel::PersonName;
  if (name == "email") return SemanticLabel::Email;
  if (name == "phone") return SemanticLabel::Phone;
  if (name == "date") return SemanticLabel::Date;
  if (name == "address-part") return SemanticLabel::AddressPart;
  if (name == "identifier") return SemanticLabel::Identifier;
  if (name == "numeric-measure") return SemanticLabel::NumericMeasure;
  if (name == "free-text") return SemanticLabel::FreeText;
  if (name == "unknown") return SemanticLabel::Unknown;
  return std::nullopt;
}

const AttributeDef* Schema::find(const CellPath& path) const {
  for (const auto& attr : attributes) {
    if (attr.path == path) return &attr;
  }
  return nullptr;
}

std::vector<CellPath> Schema::paths() const {
  std::vector<CellPath> out;
  out.reserve(attributes.size());
  for (const auto& attr : attributes) out.push_back(attr.path);
  return out;
}

std::string Constraint::describe() const {
  auto join = [](const std::vector<CellPath>& paths) {
    std::string out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (i > 0) out += ",";
      out += paths[i].str();
    }
    return out;
  };
  switch (kind) {
    case Kind::Unique: return "unique(" + join(paths) + ")";
    case Kind::TemporalUnique: return "temporal-unique(" + join(paths) + ")";
    case Kind::FunctionalDependency: return "fd(" + join(lhs) + " -> " + join(rhs) + ")";
  }
  return "?";
}

namespace {

Value paths_to_value(const std::vector<CellPath>& paths) {
  Value::List out;
  for (const auto& p : paths) out.emplace_back(p.str());
  return Value(std::move(out));
}

std::vector<CellPath> paths_from_value(const Value& value, std::string_view what) {
  std::vector<CellPath> out;
  for (const auto& v : serde::as_list(value, what)) {
    if (v.kind() != ValueKind::Text) raise("parse", std::string(what) + ": expected path strings");
    out.push_back(CellPath::parse(v.as_text()));
  }
  return out;
}

}  // namespace

Value schema_to_value(const Schema& schema) {
  Document doc;
  doc.set("model", Value(std::string(to_string(schema.model))));
  Value::List attrs;
  for (const auto& attr : schema.attributes) {
    Document a;
    a.set("path", Value(attr.path.str()));
    a.set("kind", Value(std::string(to_string(attr.kind))));
    a.set("semantic_type", Value(std::string(to_string(attr.semantic.label))));
    a.set("semantic_confidence", serde::num(attr.semantic.confidence));
    a.set("nullable", Value(attr.nullable));
    attrs.emplace_back(std::move(a));
  }
  doc.set("attributes", Value(std::move(attrs)));
  Value::List rels;
  for (const auto& rel : schema.relationships) {
    Document r;
    r.set("kind", Value(rel.kind == RelationshipKind::ForeignKey ? "foreign-key" : "nesting"));
    r.set("from", Value(rel.from.str()));
    r.set("to", Value(rel.to.str()));
    rels.emplace_back(std::move(r));
  }
  doc.set("relationships", Value(std::move(rels)));
  return Value(std::move(doc));
}

Schema schema_from_value(const Value& value) {
  const Document& doc = serde::as_document(value, "schema");
  Schema schema;
  auto model = data_model_from_string(serde::get_text(doc, "model"));
  if (!model) raise("parse", "schema: unknown data model");
  schema.model = *model;
  for (const auto& av : serde::as_list(serde::require(doc, "attributes"), "schema.attributes")) {
    const Document& a = serde::as_document(av, "schema attribute");
    AttributeDef attr;
    attr.path = CellPath::parse(serde::get_text(a, "path"));
    auto kind = value_kind_from_string(serde::get_text(a, "kind"));
    if (!kind) raise("parse", "schema: unknown value kind");
    attr.kind = *kind;
    auto label = semantic_label_from_string(serde::get_text_or(a, "semantic_type", "unknown"));
    attr.semantic.label = label.value_or(SemanticLabel::Unknown);
    attr.semantic.confidence = serde::get_double_or(a, "semantic_confidence", 0.0);
    attr.nullable = serde::get_bool_or(a, "nullable", true);
    schema.attributes.push_back(std::move(attr));
  }
  if (const Value* rels = doc.find("relationships")) {
    for (const auto& rv : serde::as_list(*rels, "schema.relationships")) {
      const Document& r = serde::as_document(rv, "relationship");
      Relationship rel;
      rel.kind = serde::get_text(r, "kind") == "foreign-key" ? RelationshipKind::ForeignKey
                                                             : RelationshipKind::Nesting;
      rel.from = CellPath::parse(serde::get_text(r, "from"));
      rel.to = CellPath::parse(serde::get_text(r, "to"));
      schema.relationships.push_back(std::move(rel));
    }
  }
  return schema;
}

Value constraint_to_value(const Constraint& constraint) {
  Document doc;
  switch (constraint.kind) {
    case Constraint::Kind::Unique:
      doc.set("kind", Value("unique"));
      doc.set("paths", paths_to_value(constraint.paths));
      break;
    case Constraint::Kind::TemporalUnique:
      doc.set("kind", Value("temporal-unique"));
      doc.set("paths", paths_to_value(constraint.paths));
      break;
    case Constraint::Kind::FunctionalDependency:
      doc.set("kind", Value("fd"));
      doc.set("lhs", paths_to_value(constraint.lhs));
      doc.set("rhs", paths_to_value(constraint.rhs));
      break;
  }
  return Value(std::move(doc));
}

Constraint constraint_from_value(const Value& value) {
  const Document& doc = serde::as_document(value, "constraint");
  Constraint c;
  const std::string kind = serde::get_text(doc, "kind");
  if (kind == "unique") {
    c.kind = Constraint::Kind::Unique;
    c.paths = paths_from_value(serde::require(doc, "paths"), "constraint.paths");
  } else if (kind == "temporal-unique") {
    c.kind = Constraint::Kind::TemporalUnique;
    c.paths = paths_from_value(serde::require(doc, "paths"), "constraint.paths");
  } else if (kind == "fd") {
    c.kind = Constraint::Kind::FunctionalDependency;
    c.lhs = paths_from_value(serde::require(doc, "lhs"), "constraint.lhs");
    c.rhs = paths_from_value(serde::require(doc, "rhs"), "constraint.rhs");
  } else {
    raise("parse", "constraint: unknown kind '" + kind + "'");
  }
  return c;
}

Value enriched_schema_to_value(const EnrichedSchema& schema) {
  Document doc;
  doc.set("schema", schema_to_value(schema.schema));
  Value::List constraints;
  for (const auto& c : schema.constraints) constraints.push_back(constraint_to_value(c));
  doc.set("constraints", Value(std::move(constraints)));
  return Value(std::move(doc));
}

EnrichedSchema enriched_schema_from_value(const Value& value) {
  const Document& doc = serde::as_document(value, "enriched schema");
  EnrichedSchema out;
  out.schema = schema_from_value(serde::require(doc, "schema"));
  if (const Value* cs = doc.find("constraints")) {
    for (const auto& cv : serde::as_list(*cs, "constraints")) {
      out.constraints.push_back(constraint_from_value(cv));
    }
  }
  return out;
}

}  // namespace dupforge
