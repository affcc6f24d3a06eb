#include "dupforge/csv.hpp"

#include <istream>
#include <ostream>

#include "dupforge/common.hpp"

namespace dupforge {

std::optional<std::vector<CsvField>> CsvReader::next_row() {
  if (eof_) return std::nullopt;
  std::vector<CsvField> fields;
  CsvField current;
  bool in_quotes = false;
  bool saw_any = false;
  bool field_was_quoted = false;
  ++row_;

  auto finish_field = [&] {
    current.quoted = field_was_quoted;
    fields.push_back(std::move(current));
    current = CsvField{};
    field_was_quoted = false;
  };

  int ci;
  while ((ci = in_.get()) != std::char_traits<char>::eof()) {
    const char c = static_cast<char>(ci);
    saw_any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          current.text.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        current.text.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!current.text.empty()) {
          raise("parse", "csv row " + std::to_string(row_) + ": quote inside unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        finish_field();
        break;
      case '\r':
        if (in_.peek() == '\n') in_.get();
        [[fallthrough]];
      case '\n':
        finish_field();
        return fields;
      default:
        if (field_was_quoted) {
          raise("parse", "csv row " + std::to_string(row_) + ": content after closing quote");
        }
        current.text.push_back(c);
    }
  }
  if (in_quotes) {
    raise("parse", "csv row " + std::to_string(row_) + ": unterminated quoted field");
  }
  if (!saw_any) {
    eof_ = true;
    return std::nullopt;
  }
  eof_ = true;
  finish_field();
  return fields;
}

void CsvWriter::write_row(const std::vector<CsvField>& fields) {
  buffer_.clear();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) buffer_.push_back(',');
    const CsvField& field = fields[i];
    const bool needs_quotes =
        field.quoted || field.text.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) {
      buffer_ += field.text;
      continue;
    }
    buffer_.push_back('"');
    for (char c : field.text) {
      if (c == '"') buffer_.push_back('"');
      buffer_.push_back(c);
    }
    buffer_.push_back('"');
  }
  buffer_ += "\r\n";
  out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
}

void CsvWriter::write_header(const std::vector<std::string>& names) {
  std::vector<CsvField> fields;
  fields.reserve(names.size());
  for (const auto& name : names) fields.push_back(CsvField{name, false});
  write_row(fields);
}

CsvField csv_render(const Value& value) {
  switch (value.kind()) {
    case ValueKind::Null:
      return CsvField{"", false};
    case ValueKind::Text:
      // Quote empty strings so they stay distinct from null cells.
      return CsvField{value.as_text(), value.as_text().empty()};
    case ValueKind::Boolean:
    case ValueKind::Number:
      return CsvField{render_plain(value), false};
    case ValueKind::List:
    case ValueKind::Document:
      raise("inconsistent_input", "nested value cannot be rendered as a csv cell");
  }
  return CsvField{};
}

}  // namespace dupforge
