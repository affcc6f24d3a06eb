#include "dupforge/serde.hpp"

#include <charconv>

namespace dupforge::serde {

Value num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  if (auto d = Decimal::parse(std::string_view(buf, end - buf))) return Value(*d);
  return Value(Decimal::from_int(0));
}

Value num(std::int64_t v) { return Value(Decimal::from_int(v)); }

const Document& as_document(const Value& value, std::string_view what) {
  if (value.kind() != ValueKind::Document) {
    raise("parse", std::string(what) + ": expected an object");
  }
  return value.as_document();
}

const Value::List& as_list(const Value& value, std::string_view what) {
  if (value.kind() != ValueKind::List) {
    raise("parse", std::string(what) + ": expected an array");
  }
  return value.as_list();
}

const Value& require(const Document& doc, std::string_view name) {
  const Value* v = doc.find(name);
  if (v == nullptr) raise("parse", "missing field '" + std::string(name) + "'");
  return *v;
}

const Value* find(const Document& doc, std::string_view name) { return doc.find(name); }

std::string get_text(const Document& doc, std::string_view name) {
  const Value& v = require(doc, name);
  if (v.kind() != ValueKind::Text) {
    raise("parse", "field '" + std::string(name) + "' must be a string");
  }
  return v.as_text();
}

std::string get_text_or(const Document& doc, std::string_view name, std::string fallback) {
  const Value* v = doc.find(name);
  if (v == nullptr || v->is_null()) return fallback;
  if (v->kind() != ValueKind::Text) {
    raise("parse", "field '" + std::string(name) + "' must be a string");
  }
  return v->as_text();
}

namespace {

std::int64_t to_int(const Value& v, std::string_view name) {
  if (v.kind() != ValueKind::Number) {
    raise("parse", "field '" + std::string(name) + "' must be a number");
  }
  auto i = v.as_number().to_int();
  if (!i) raise("parse", "field '" + std::string(name) + "' must be an integer");
  return *i;
}

}  // namespace

std::int64_t get_int(const Document& doc, std::string_view name) {
  return to_int(require(doc, name), name);
}

std::int64_t get_int_or(const Document& doc, std::string_view name, std::int64_t fallback) {
  const Value* v = doc.find(name);
  if (v == nullptr || v->is_null()) return fallback;
  return to_int(*v, name);
}

double get_double(const Document& doc, std::string_view name) {
  const Value& v = require(doc, name);
  if (v.kind() != ValueKind::Number) {
    raise("parse", "field '" + std::string(name) + "' must be a number");
  }
  return v.as_number().to_double();
}

double get_double_or(const Document& doc, std::string_view name, double fallback) {
  const Value* v = doc.find(name);
  if (v == nullptr || v->is_null()) return fallback;
  if (v->kind() != ValueKind::Number) {
    raise("parse", "field '" + std::string(name) + "' must be a number");
  }
  return v->as_number().to_double();
}

bool get_bool_or(const Document& doc, std::string_view name, bool fallback) {
  const Value* v = doc.find(name);
  if (v == nullptr || v->is_null()) return fallback;
  if (v->kind() != ValueKind::Boolean) {
    raise("parse", "field '" + std::string(name) + "' must be a boolean");
  }
  return v->as_bool();
}

}  // namespace dupforge::serde
