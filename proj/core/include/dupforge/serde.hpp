#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dupforge/common.hpp"
#include "dupforge/value.hpp"

// Small helpers for reading/writing artifact documents (config, schema,
// manifests). Readers throw Error("parse", ...) naming the missing field.
namespace dupforge::serde {

Value num(double v);
Value num(std::int64_t v);

const Document& as_document(const Value& value, std::string_view what);
const Value::List& as_list(const Value& value, std::string_view what);

const Value& require(const Document& doc, std::string_view name);
const Value* find(const Document& doc, std::string_view name);

std::string get_text(const Document& doc, std::string_view name);
std::string get_text_or(const Document& doc, std::string_view name, std::string fallback);
std::int64_t get_int(const Document& doc, std::string_view name);
std::int64_t get_int_or(const Document& doc, std::string_view name, std::int64_t fallback);
double get_double(const Document& doc, std::string_view name);
double get_double_or(const Document& doc, std::string_view name, double fallback);
bool get_bool_or(const Document& doc, std::string_view name, bool fallback);

}  // namespace dupforge::serde
