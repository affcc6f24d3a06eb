#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dupforge/common.hpp"
#include "dupforge/decimal.hpp"

namespace dupforge {

enum class ValueKind { Null, Boolean, Number, Text, List, Document };

std::string_view to_string(ValueKind kind);
std::optional<ValueKind> value_kind_from_string(std::string_view name);

class Value;

// Ordered attribute map. Attribute order is preserved and significant for
// serialization; keys are unique within one document.
class Document {
 public:
  using Field = std::pair<std::string, Value>;

  Document() = default;

  const Value* find(std::string_view name) const;
  Value* find(std::string_view name);
  // Inserts or overwrites, keeping the original position on overwrite.
  void set(std::string_view name, Value value);
  bool erase(std::string_view name);

  const std::vector<Field>& fields() const { return fields_; }
  std::vector<Field>& fields() { return fields_; }
  bool empty() const { return fields_.empty(); }
  std::size_t size() const { return fields_.size(); }

  friend bool operator==(const Document& a, const Document& b);

 private:
  std::vector<Field> fields_;
};

class Value {
 public:
  using List = std::vector<Value>;

  Value() : data_(std::monostate{}) {}
  Value(bool b) : data_(b) {}
  Value(Decimal d) : data_(d) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(std::string_view s) : data_(std::string(s)) {}
  Value(const char* s) : data_(std::string(s)) {}
  Value(List l) : data_(std::move(l)) {}
  Value(Document d) : data_(std::move(d)) {}

  static Value null() { return Value(); }
  static Value number(std::int64_t v) { return Value(Decimal::from_int(v)); }

  ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }
  bool is_null() const { return kind() == ValueKind::Null; }

  bool as_bool() const { return std::get<bool>(data_); }
  const Decimal& as_number() const { return std::get<Decimal>(data_); }
  const std::string& as_text() const { return std::get<std::string>(data_); }
  const List& as_list() const { return std::get<List>(data_); }
  List& as_list() { return std::get<List>(data_); }
  const Document& as_document() const { return std::get<Document>(data_); }
  Document& as_document() { return std::get<Document>(data_); }

  friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

 private:
  // Alternative order must match ValueKind.
  std::variant<std::monostate, bool, Decimal, std::string, List, Document> data_;
};

// Plain-text rendering used for merging, splitting, and token statistics:
// text as-is, numbers canonical, booleans "true"/"false", null "".
std::string render_plain(const Value& value);

// Structural 64-bit hash (equal values hash equal).
std::uint64_t hash_value(const Value& value);

}  // namespace dupforge
