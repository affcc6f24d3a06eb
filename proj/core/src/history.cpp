#include "dupforge/history.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>

#include "dupforge/json_io.hpp"
#include "dupforge/serde.hpp"

namespace dupforge {

const CellHistory* EntityHistory::find(const CellPath& path) const {
  for (const auto& cell : cells) {
    if (cell.path == path) return &cell;
  }
  return nullptr;
}

CellHistory& EntityHistory::cell(const CellPath& path) {
  for (auto& c : cells) {
    if (c.path == path) return c;
  }
  cells.push_back(CellHistory{path, {}});
  return cells.back();
}

void DataHistory::add(EntityHistory entity) {
  if (!entities_.empty() && entities_.back().id >= entity.id) {
    auto it = std::lower_bound(
        entities_.begin(), entities_.end(), entity.id,
        [](const EntityHistory& e, EntityId id) { return e.id < id; });
    entities_.insert(it, std::move(entity));
    return;
  }
  entities_.push_back(std::move(entity));
}

const EntityHistory* DataHistory::find(EntityId id) const {
  auto it = std::lower_bound(entities_.begin(), entities_.end(), id,
                             [](const EntityHistory& e, EntityId i) { return e.id < i; });
  if (it == entities_.end() || it->id != id) return nullptr;
  return &*it;
}

namespace {

const Value kNull{};

}  // namespace

const Value& value_at(const EntityHistory& entity, const CellPath& path, Timestamp t) {
  if (!entity.alive_at(t)) {
    raise("outside_lifespan", "entity " + std::to_string(entity.id) + " is not alive at tick " +
                                  std::to_string(t.tick));
  }
  const CellHistory* cell = entity.find(path);
  if (cell == nullptr) return kNull;
  for (const auto& version : cell->versions) {
    if (t >= version.valid_from && t < version.valid_to) return version.value;
  }
  return kNull;
}

const Value& value_at(const DataHistory& history, EntityId entity, const CellPath& path,
                      Timestamp t) {
  const EntityHistory* e = history.find(entity);
  if (e == nullptr) raise("unknown_entity", "no entity " + std::to_string(entity));
  return value_at(*e, path, t);
}

Document snapshot_document(const EntityHistory& entity, Timestamp t) {
  Document doc;
  for (const auto& cell : entity.cells) {
    for (const auto& version : cell.versions) {
      if (t >= version.valid_from && t < version.valid_to) {
        set_cell(doc, cell.path, version.value);
        break;
      }
    }
  }
  return doc;
}

std::vector<std::pair<EntityId, Document>> snapshot_at(const DataHistory& history, Timestamp t) {
  std::vector<std::pair<EntityId, Document>> out;
  for (const auto& entity : history.entities()) {
    if (entity.alive_at(t)) {
      out.emplace_back(entity.id, snapshot_document(entity, t));
    }
  }
  return out;
}

// --- validation ------------------------------------------------------------

namespace {

std::string tuple_key(const EntityHistory& entity, const std::vector<CellPath>& paths,
                      Timestamp t) {
  std::string key;
  for (const auto& path : paths) {
    append_json(key, value_at(entity, path, t));
    key.push_back('\x1f');
  }
  return key;
}

struct BoundarySweep {
  // Timestamps at which any lifespan or any version interval starts or ends.
  std::vector<Timestamp> boundaries;

  explicit BoundarySweep(const DataHistory& history) {
    for (const auto& entity : history.entities()) {
      boundaries.push_back(entity.created_at);
      if (entity.deleted_at) boundaries.push_back(*entity.deleted_at);
      for (const auto& cell : entity.cells) {
        for (const auto& version : cell.versions) {
          boundaries.push_back(version.valid_from);
          if (version.valid_to != kOpenEnd) boundaries.push_back(version.valid_to);
        }
      }
    }
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
  }
};

void check_state_constraint(const DataHistory& history, const Constraint& constraint,
                            const std::vector<Timestamp>& boundaries,
                            std::vector<Violation>& out) {
  const bool is_fd = constraint.kind == Constraint::Kind::FunctionalDependency;
  // previous collision signature per key, to report each violation once at
  // the boundary where it starts
  std::map<std::string, std::vector<EntityId>> previous;
  for (Timestamp t : boundaries) {
    std::map<std::string, std::vector<EntityId>> colliding;
    if (is_fd) {
      std::map<std::string, std::map<std::string, std::vector<EntityId>>> groups;
      for (const auto& entity : history.entities()) {
        if (!entity.alive_at(t)) continue;
        groups[tuple_key(entity, constraint.lhs, t)][tuple_key(entity, constraint.rhs, t)]
            .push_back(entity.id);
      }
      for (auto& [lhs, rhs_groups] : groups) {
        if (rhs_groups.size() < 2) continue;
        std::vector<EntityId>& entities = colliding[lhs];
        for (auto& [rhs, ids] : rhs_groups) {
          entities.insert(entities.end(), ids.begin(), ids.end());
        }
      }
    } else {
      std::map<std::string, std::vector<EntityId>> groups;
      for (const auto& entity : history.entities()) {
        if (!entity.alive_at(t)) continue;
        groups[tuple_key(entity, constraint.paths, t)].push_back(entity.id);
      }
      for (auto& [key, ids] : groups) {
        if (ids.size() >= 2) colliding[key] = ids;
      }
    }
    for (auto& [key, ids] : colliding) {
      auto prev = previous.find(key);
      if (prev == previous.end() || prev->second != ids) {
        out.push_back(Violation{t, constraint.describe(), ids});
      }
    }
    previous = std::move(colliding);
  }
}

void check_temporal_unique(const DataHistory& history, const Constraint& constraint,
                           std::vector<Violation>& out) {
  // Usage run per key value: exactly one entity, one contiguous interval.
  struct Run {
    EntityId entity;
    Timestamp end;
    bool reported = false;
  };
  struct Start {
    Timestamp from;
    Timestamp to;
    EntityId entity;
    std::string key;
  };
  std::vector<Start> starts;
  for (const auto& entity : history.entities()) {
    // Version boundaries of the combined key tuple: any contained path change
    // starts a new key instance.
    std::vector<Timestamp> points{entity.created_at};
    for (const auto& path : constraint.paths) {
      if (const CellHistory* cell = entity.find(path)) {
        for (const auto& version : cell->versions) {
          if (version.valid_from > entity.created_at) points.push_back(version.valid_from);
        }
      }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Timestamp death = entity.deleted_at.value_or(kOpenEnd);
    for (std::size_t i = 0; i < points.size(); ++i) {
      Timestamp from = points[i];
      Timestamp to = i + 1 < points.size() ? points[i + 1] : death;
      if (from >= death) break;
      if (to > death) to = death;
      starts.push_back(Start{from, to, entity.id, tuple_key(entity, constraint.paths, from)});
    }
  }
  std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.entity < b.entity;
  });
  std::unordered_map<std::string, Run> runs;
  for (const auto& start : starts) {
    auto [it, inserted] = runs.try_emplace(start.key, Run{start.entity, start.to});
    if (inserted) continue;
    Run& run = it->second;
    const bool contiguous_same_entity = run.entity == start.entity && run.end == start.from;
    if (contiguous_same_entity) {
      run.end = start.to;
      continue;
    }
    if (!run.reported) {
      out.push_back(Violation{start.from, constraint.describe(), {run.entity, start.entity}});
      run.reported = true;
    }
    run.entity = start.entity;
    run.end = start.to;
  }
}

}  // namespace

std::vector<Violation> validate_history(const DataHistory& history,
                                        const EnrichedSchema& schema) {
  std::vector<Violation> out;
  BoundarySweep sweep(history);
  for (const auto& constraint : schema.constraints) {
    switch (constraint.kind) {
      case Constraint::Kind::Unique:
      case Constraint::Kind::FunctionalDependency:
        check_state_constraint(history, constraint, sweep.boundaries, out);
        break;
      case Constraint::Kind::TemporalUnique:
        check_temporal_unique(history, constraint, out);
        break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    if (a.at != b.at) return a.at < b.at;
    return a.constraint < b.constraint;
  });
  return out;
}

// --- serialization ----------------------------------------------------------

namespace {

void append_version_line(std::string& out, EntityId id, std::string_view path,
                         const Value& value, Timestamp from, Timestamp to) {
  out += "{\"entity_id\":";
  out += std::to_string(id);
  out += ",\"path\":";
  append_json_escaped(out, path);
  out += ",\"value\":";
  append_json(out, value);
  out += ",\"valid_from\":";
  out += std::to_string(from.tick);
  out += ",\"valid_to\":";
  if (to == kOpenEnd) {
    out += "null";
  } else {
    out += std::to_string(to.tick);
  }
  out += "}\n";
}

}  // namespace

void append_history_lines(std::string& out, const EntityHistory& entity) {
  append_version_line(out, entity.id, "__lifespan__", Value::null(), entity.created_at,
                      entity.deleted_at.value_or(kOpenEnd));
  for (const auto& cell : entity.cells) {
    const std::string path = cell.path.str();
    for (const auto& version : cell.versions) {
      append_version_line(out, entity.id, path, version.value, version.valid_from,
                          version.valid_to);
    }
  }
}

void write_history(std::ostream& out, const DataHistory& history) {
  std::string buffer;
  for (const auto& entity : history.entities()) {
    buffer.clear();
    append_history_lines(buffer, entity);
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  }
}

void read_history_stream(std::istream& in,
                         const std::function<void(EntityHistory&&)>& visit) {
  std::string line;
  EntityHistory current;
  bool open = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Value parsed = parse_json(line);
    if (parsed.kind() != ValueKind::Document) raise("parse", "history line: expected an object");
    Document& doc = parsed.as_document();
    const EntityId id = serde::get_int(doc, "entity_id");
    const std::string path = serde::get_text(doc, "path");
    const Timestamp from{serde::get_int(doc, "valid_from")};
    const Value* to_field = doc.find("valid_to");
    const Timestamp to = (to_field == nullptr || to_field->is_null())
                             ? kOpenEnd
                             : Timestamp{serde::get_int(doc, "valid_to")};
    if (!open || current.id != id) {
      if (open) {
        if (id < current.id) {
          raise("parse", "history line " + std::to_string(line_no) +
                             ": entities must be grouped in ascending id order");
        }
        visit(std::move(current));
      }
      current = EntityHistory{};
      current.id = id;
      open = true;
    }
    if (path == "__lifespan__") {
      current.created_at = from;
      if (to != kOpenEnd) current.deleted_at = to;
    } else {
      Value* value = doc.find("value");
      current.cell(CellPath::parse(path))
          .versions.push_back(
              VersionedValue{value ? std::move(*value) : Value::null(), from, to});
    }
  }
  if (open) visit(std::move(current));
}

DataHistory read_history(std::istream& in) {
  DataHistory history;
  read_history_stream(in, [&](EntityHistory&& entity) { history.add(std::move(entity)); });
  return history;
}

}  // namespace dupforge
