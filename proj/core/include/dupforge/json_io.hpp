#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dupforge/value.hpp"

namespace dupforge {

// Canonical JSON rendering: document field order preserved, numbers emitted
// as exact decimal tokens, strings minimally escaped. Two equal values
// always serialize to identical bytes.
void append_json(std::string& out, const Value& value);
std::string to_json(const Value& value);

// Strict single-value parse; numbers are captured as exact decimals from
// the raw token. Throws Error("parse", ...) on malformed input.
Value parse_json(std::string_view text);

void append_json_escaped(std::string& out, std::string_view text);

}  // namespace dupforge
