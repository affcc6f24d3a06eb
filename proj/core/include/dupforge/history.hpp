#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dupforge/common.hpp"
#include "dupforge/path.hpp"
#include "dupforge/schema.hpp"
#include "dupforge/value.hpp"

namespace dupforge {

// One value instance of a cell, valid over the half-open interval
// [valid_from, valid_to).
struct VersionedValue {
  Value value;
  Timestamp valid_from;
  Timestamp valid_to = kOpenEnd;
};

struct CellHistory {
  CellPath path;
  std::vector<VersionedValue> versions;  // disjoint, contiguous, time-ordered
};

struct EntityHistory {
  EntityId id = 0;
  Timestamp created_at;
  std::optional<Timestamp> deleted_at;
  std::vector<CellHistory> cells;

  bool alive_at(Timestamp t) const {
    return t >= created_at && (!deleted_at || t < *deleted_at);
  }
  const CellHistory* find(const CellPath& path) const;
  CellHistory& cell(const CellPath& path);
};

// The world truth: per-entity, per-cell value versions over the simulated
// timeline. Immutable after construction; lookups are pure.
class DataHistory {
 public:
  void add(EntityHistory entity);

  const EntityHistory* find(EntityId id) const;
  const std::vector<EntityHistory>& entities() const { return entities_; }
  std::vector<EntityHistory>& entities() { return entities_; }

 private:
  std::vector<EntityHistory> entities_;  // ascending by id
};

// Value of (entity, path) at time t. Cells with no version at t resolve to
// null. Throws Error("unknown_entity") / Error("outside_lifespan").
const Value& value_at(const DataHistory& history, EntityId entity, const CellPath& path,
                      Timestamp t);
const Value& value_at(const EntityHistory& entity, const CellPath& path, Timestamp t);

// Document of all cells of one entity at t (entity must be alive at t).
Document snapshot_document(const EntityHistory& entity, Timestamp t);

// All entities alive at t with fully resolved documents.
std::vector<std::pair<EntityId, Document>> snapshot_at(const DataHistory& history, Timestamp t);

struct Violation {
  Timestamp at;
  std::string constraint;
  std::vector<EntityId> entities;
};

// Replays every event boundary and checks all constraints; empty result
// means every intermediate snapshot (and, for temporal-unique constraints,
// all of time) is consistent.
std::vector<Violation> validate_history(const DataHistory& history,
                                        const EnrichedSchema& schema);

// --- JSON-lines serialization ---------------------------------------------
// One line per (entity, path, version); lifespans use path "__lifespan__".
// Lines are grouped by entity in ascending id order.

void append_history_lines(std::string& out, const EntityHistory& entity);
void write_history(std::ostream& out, const DataHistory& history);

// Streaming reader: invokes the visitor once per entity. Lines must be
// grouped by entity (as written by write_history).
void read_history_stream(std::istream& in,
                         const std::function<void(EntityHistory&&)>& visit);
DataHistory read_history(std::istream& in);

}  // namespace dupforge
