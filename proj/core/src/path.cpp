#include "dupforge/path.hpp"

namespace dupforge {

CellPath CellPath::parse(std::string_view dotted) {
  std::vector<std::string> segments;
  std::string current;
  bool escaped = false;
  for (char c : dotted) {
    if (escaped) {
      current.push_back(c);
      escaped = false;
    } else if (c == '\\') {
      escaped = true;
    } else if (c == '.') {
      segments.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  segments.push_back(std::move(current));
  return CellPath(std::move(segments));
}

std::string CellPath::str() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0) out.push_back('.');
    for (char c : segments_[i]) {
      if (c == '.' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
  }
  return out;
}

CellPath CellPath::child(std::string_view name) const {
  std::vector<std::string> segments = segments_;
  segments.emplace_back(name);
  return CellPath(std::move(segments));
}

CellPath CellPath::parent() const {
  std::vector<std::string> segments = segments_;
  if (!segments.empty()) segments.pop_back();
  return CellPath(std::move(segments));
}

const Value* get_cell(const Document& doc, const CellPath& path) {
  const Document* current = &doc;
  const Value* value = nullptr;
  for (std::size_t i = 0; i < path.segments().size(); ++i) {
    value = current->find(path.segments()[i]);
    if (value == nullptr) return nullptr;
    if (i + 1 < path.segments().size()) {
      if (value->kind() != ValueKind::Document) return nullptr;
      current = &value->as_document();
    }
  }
  return value;
}

void set_cell(Document& doc, const CellPath& path, Value value) {
  Document* current = &doc;
  for (std::size_t i = 0; i + 1 < path.segments().size(); ++i) {
    Value* next = current->find(path.segments()[i]);
    if (next == nullptr || next->kind() != ValueKind::Document) {
      current->set(path.segments()[i], Value(Document{}));
      next = current->find(path.segments()[i]);
    }
    current = &next->as_document();
  }
  current->set(path.segments().back(), std::move(value));
}

bool erase_cell(Document& doc, const CellPath& path) {
  Document* current = &doc;
  for (std::size_t i = 0; i + 1 < path.segments().size(); ++i) {
    Value* next = current->find(path.segments()[i]);
    if (next == nullptr || next->kind() != ValueKind::Document) return false;
    current = &next->as_document();
  }
  return current->erase(path.segments().back());
}

namespace {

void enumerate_into(const Document& doc, CellPath prefix, std::vector<CellPath>& out) {
  for (const auto& [name, value] : doc.fields()) {
    CellPath path = prefix.child(name);
    if (value.kind() == ValueKind::Document) {
      enumerate_into(value.as_document(), path, out);
    } else {
      out.push_back(std::move(path));
    }
  }
}

}  // namespace

std::vector<CellPath> enumerate_cells(const Document& doc) {
  std::vector<CellPath> out;
  enumerate_into(doc, CellPath{}, out);
  return out;
}

}  // namespace dupforge
