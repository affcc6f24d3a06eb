#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dupforge/value.hpp"

namespace dupforge {

// Addresses one cell inside an entity document: a sequence of attribute
// names descending through nested documents. A cell is a scalar or a whole
// list; list elements are not addressed individually.
class CellPath {
 public:
  CellPath() = default;
  explicit CellPath(std::vector<std::string> segments) : segments_(std::move(segments)) {}
  explicit CellPath(std::string_view single) : segments_{std::string(single)} {}

  // Dotted form; '.' and '\' inside segment names are backslash-escaped.
  static CellPath parse(std::string_view dotted);
  std::string str() const;

  const std::vector<std::string>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  std::size_t depth() const { return segments_.size(); }
  const std::string& leaf() const { return segments_.back(); }

  CellPath child(std::string_view name) const;
  CellPath parent() const;

  friend bool operator==(const CellPath&, const CellPath&) = default;
  friend auto operator<=>(const CellPath&, const CellPath&) = default;

 private:
  std::vector<std::string> segments_;
};

// Resolves a path inside a document; null when any segment is missing.
const Value* get_cell(const Document& doc, const CellPath& path);
// Creates intermediate documents as needed.
void set_cell(Document& doc, const CellPath& path, Value value);
// Removes the cell; true if it existed. Empty intermediate documents stay.
bool erase_cell(Document& doc, const CellPath& path);

// All cell paths of a document in field order: every scalar leaf plus every
// list (lists are one cell; their contents are not descended into).
std::vector<CellPath> enumerate_cells(const Document& doc);

struct CellPathHash {
  std::size_t operator()(const CellPath& p) const {
    std::uint64_t h = kFnvOffset;
    for (const auto& s : p.segments()) {
      h = fnv1a64(s, h);
      h = fnv1a64(std::uint64_t{0x1f}, h);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace dupforge
