#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dupforge/value.hpp"

namespace dupforge {

// One raw CSV field. Readers keep the quoting flag so unquoted empty fields
// (null) stay distinguishable from quoted empty strings.
struct CsvField {
  std::string text;
  bool quoted = false;
};

// Streaming RFC-4180 reader: quoted fields, doubled quotes, embedded line
// breaks; accepts both CRLF and LF. Throws Error("parse", ...) with the row
// number on malformed input.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<CsvField>> next_row();
  std::size_t row_number() const { return row_; }

 private:
  std::istream& in_;
  std::size_t row_ = 0;
  bool eof_ = false;
};

// RFC-4180 writer: CRLF row endings; fields containing separators, quotes,
// or line breaks are quoted, and a forced-quote flag preserves empty-string
// vs null round trips.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void write_row(const std::vector<CsvField>& fields);
  void write_header(const std::vector<std::string>& names);

 private:
  std::ostream& out_;
  std::string buffer_;
};

// CSV cell rendering of a scalar value; lists/documents are not
// representable in the relational model and raise Error("inconsistent_input").
CsvField csv_render(const Value& value);

}  // namespace dupforge
