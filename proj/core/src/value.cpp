#include "dupforge/value.hpp"

#include <algorithm>

namespace dupforge {

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Null: return "null";
    case ValueKind::Boolean: return "boolean";
    case ValueKind::Number: return "number";
    case ValueKind::Text: return "text";
    case ValueKind::List: return "list";
    case ValueKind::Document: return "document";
  }
  return "?";
}

std::optional<ValueKind> value_kind_from_string(std::string_view name) {
  if (name == "null") return ValueKind::Null;
  if (name == "boolean") return ValueKind::Boolean;
  if (name == "number") return ValueKind::Number;
  if (name == "text") return ValueKind::Text;
  if (name == "list") return ValueKind::List;
  if (name == "document") return ValueKind::Document;
  return std::nullopt;
}

const Value* Document::find(std::string_view name) const {
  for (const auto& [key, value] : fields_) {
    if (key == name) return &value;
  }
  return nullptr;
}

Value* Document::find(std::string_view name) {
  for (auto& [key, value] : fields_) {
    if (key == name) return &value;
  }
  return nullptr;
}

void Document::set(std::string_view name, Value value) {
  if (Value* existing = find(name)) {
    *existing = std::move(value);
    return;
  }
  fields_.emplace_back(std::string(name), std::move(value));
}

bool Document::erase(std::string_view name) {
  auto it = std::find_if(fields_.begin(), fields_.end(),
                         [&](const Field& f) { return f.first == name; });
  if (it == fields_.end()) return false;
  fields_.erase(it);
  return true;
}

bool operator==(const Document& a, const Document& b) { return a.fields_ == b.fields_; }

std::string render_plain(const Value& value) {
  switch (value.kind()) {
    case ValueKind::Null: return "";
    case ValueKind::Boolean: return value.as_bool() ? "true" : "false";
    case ValueKind::Number: return value.as_number().to_string();
    case ValueKind::Text: return value.as_text();
    case ValueKind::List: {
      std::string out;
      for (std::size_t i = 0; i < value.as_list().size(); ++i) {
        if (i > 0) out += "; ";
        out += render_plain(value.as_list()[i]);
      }
      return out;
    }
    case ValueKind::Document: {
      std::string out;
      for (std::size_t i = 0; i < value.as_document().fields().size(); ++i) {
        if (i > 0) out += "; ";
        out += render_plain(value.as_document().fields()[i].second);
      }
      return out;
    }
  }
  return "";
}

std::uint64_t hash_value(const Value& value) {
  std::uint64_t h = fnv1a64(static_cast<std::uint64_t>(value.kind()));
  switch (value.kind()) {
    case ValueKind::Null:
      break;
    case ValueKind::Boolean:
      h = fnv1a64(std::uint64_t{value.as_bool()}, h);
      break;
    case ValueKind::Number:
      h = fnv1a64(static_cast<std::uint64_t>(value.as_number().mantissa()), h);
      h = fnv1a64(static_cast<std::uint64_t>(value.as_number().exponent()), h);
      break;
    case ValueKind::Text:
      h = fnv1a64(value.as_text(), h);
      break;
    case ValueKind::List:
      for (const Value& v : value.as_list()) h = fnv1a64(hash_value(v), h);
      break;
    case ValueKind::Document:
      for (const auto& [key, v] : value.as_document().fields()) {
        h = fnv1a64(key, h);
        h = fnv1a64(hash_value(v), h);
      }
      break;
  }
  return mix64(h);
}

}  // namespace dupforge
