#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dupforge/csv.hpp"
#include "dupforge/decimal.hpp"
#include "dupforge/history.hpp"
#include "dupforge/json_io.hpp"
#include "dupforge/path.hpp"
#include "dupforge/rng.hpp"
#include "dupforge/value.hpp"

using namespace dupforge;

TEST_CASE("decimal parses and renders canonically") {
  auto check = [](std::string_view in, std::string_view out) {
    auto d = Decimal::parse(in);
    REQUIRE(d.has_value());
    CHECK(d->to_string() == out);
  };
  check("0", "0");
  check("-0", "0");
  check("12.50", "12.5");
  check("0.1", "0.1");
  check("-0.030", "-0.03");
  check("1e6", "1000000");
  check("1.5e-3", "0.0015");
  check("100000", "100000");

  CHECK(!Decimal::parse("").has_value());
  CHECK(!Decimal::parse("abc").has_value());
  CHECK(!Decimal::parse("1.").has_value());
  CHECK(!Decimal::parse("1e999").has_value());
  CHECK(!Decimal::parse("12345678901234567890123").has_value());
}

TEST_CASE("decimal ordering") {
  auto d = [](std::string_view s) { return *Decimal::parse(s); };
  CHECK(d("1.5") < d("2"));
  CHECK(d("-3") < d("0.001"));
  CHECK(d("10") == d("10.0"));
  CHECK(d("0.09") < d("0.1"));
  CHECK(d("12345678901234567") < d("12345678901234568"));
  CHECK(d("-2") < d("-1.5"));
  CHECK(d("1e10") > d("999"));
  CHECK(d("1e-10") > d("0"));
}

TEST_CASE("json round trip preserves order and exact numbers") {
  const std::string text =
      R"({"name":"Jörg","age":42,"score":0.1,"tags":["a","b"],"addr":{"zip":"01099","city":"Dresden"},"note":null,"ok":true})";
  Value v = parse_json(text);
  const std::string out = to_json(v);
  CHECK(out ==
        "{\"name\":\"Jörg\",\"age\":42,\"score\":0.1,\"tags\":[\"a\",\"b\"],"
        "\"addr\":{\"zip\":\"01099\",\"city\":\"Dresden\"},\"note\":null,\"ok\":true}");
  // Parsing its own output is the identity.
  CHECK(parse_json(out) == v);
  CHECK_THROWS_AS(parse_json("{\"a\":}"), Error);
}

TEST_CASE("cell paths address nested documents") {
  Document doc;
  set_cell(doc, CellPath::parse("address.city"), Value("Hamburg"));
  set_cell(doc, CellPath::parse("address.zip"), Value("20095"));
  set_cell(doc, CellPath::parse("name"), Value("Ada"));

  CHECK(get_cell(doc, CellPath::parse("address.city"))->as_text() == "Hamburg");
  CHECK(get_cell(doc, CellPath::parse("address.missing")) == nullptr);
  auto cells = enumerate_cells(doc);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].str() == "address.city");
  CHECK(cells[2].str() == "name");

  // escaping round trip
  CellPath weird(std::vector<std::string>{"a.b", "c\\d"});
  CHECK(CellPath::parse(weird.str()) == weird);
}

TEST_CASE("csv reader handles quoting and distinguishes null from empty") {
  std::istringstream in("a,b,c\r\n1,\"x,\"\"y\"\"\",\r\n\"\",\"line\nbreak\",z\r\n");
  CsvReader reader(in);
  auto header = reader.next_row();
  REQUIRE(header.has_value());
  CHECK((*header)[0].text == "a");

  auto row1 = reader.next_row();
  REQUIRE(row1.has_value());
  CHECK((*row1)[1].text == "x,\"y\"");
  CHECK((*row1)[2].text.empty());
  CHECK_FALSE((*row1)[2].quoted);  // null

  auto row2 = reader.next_row();
  REQUIRE(row2.has_value());
  CHECK((*row2)[0].quoted);  // empty string, not null
  CHECK((*row2)[1].text == "line\nbreak");
  CHECK(!reader.next_row().has_value());
}

TEST_CASE("csv writer round trips through the reader") {
  std::ostringstream out;
  CsvWriter writer(out);
  writer.write_header({"name", "note"});
  writer.write_row({CsvField{"a\"b", false}, CsvField{"", true}});
  std::istringstream in(out.str());
  CsvReader reader(in);
  reader.next_row();
  auto row = reader.next_row();
  REQUIRE(row.has_value());
  CHECK((*row)[0].text == "a\"b");
  CHECK((*row)[1].quoted);
}

namespace {

EntityHistory make_entity(EntityId id, Timestamp created) {
  EntityHistory e;
  e.id = id;
  e.created_at = created;
  return e;
}

}  // namespace

TEST_CASE("value_at resolves half-open version intervals") {
  EntityHistory e = make_entity(1, Timestamp{0});
  auto& cell = e.cell(CellPath::parse("name"));
  cell.versions.push_back({Value("v1"), Timestamp{0}, Timestamp{5}});
  cell.versions.push_back({Value("v2"), Timestamp{5}, kOpenEnd});
  DataHistory h;
  h.add(std::move(e));

  CHECK(value_at(h, 1, CellPath::parse("name"), Timestamp{4}).as_text() == "v1");
  CHECK(value_at(h, 1, CellPath::parse("name"), Timestamp{5}).as_text() == "v2");
  CHECK(value_at(h, 1, CellPath::parse("name"), Timestamp{7}).as_text() == "v2");

  CHECK_THROWS_WITH_AS(static_cast<void>(value_at(h, 2, CellPath::parse("name"), Timestamp{0})),
                       doctest::Contains("no entity"), Error);

  DataHistory late;
  late.add(make_entity(3, Timestamp{10}));
  CHECK_THROWS_AS(static_cast<void>(value_at(late, 3, CellPath::parse("x"), Timestamp{3})),
                  Error);
}

TEST_CASE("single-version lookup is constant over the whole lifespan") {
  EntityHistory e = make_entity(7, Timestamp{0});
  e.cell(CellPath::parse("v")).versions.push_back({Value("only"), Timestamp{0}, kOpenEnd});
  DataHistory h;
  h.add(std::move(e));
  CHECK(value_at(h, 7, CellPath::parse("v"), Timestamp{7}).as_text() == "only");
}

TEST_CASE("snapshot respects lifespans and matches value_at pointwise") {
  DataHistory h;
  {
    EntityHistory e = make_entity(1, Timestamp{0});
    e.deleted_at = Timestamp{5};
    e.cell(CellPath::parse("a")).versions.push_back({Value("x"), Timestamp{0}, Timestamp{5}});
    h.add(std::move(e));
  }
  {
    EntityHistory e = make_entity(2, Timestamp{0});
    auto& cell = e.cell(CellPath::parse("a"));
    cell.versions.push_back({Value("p"), Timestamp{0}, Timestamp{3}});
    cell.versions.push_back({Value("q"), Timestamp{3}, kOpenEnd});
    h.add(std::move(e));
  }

  auto snap6 = snapshot_at(h, Timestamp{6});
  REQUIRE(snap6.size() == 1);  // entity 1 deleted at t=5
  CHECK(snap6[0].first == 2);

  // random small history cross-check: snapshot equals value_at per cell
  RandomStream rng(99);
  for (int i = 0; i < 20; ++i) {
    Timestamp t{static_cast<std::int64_t>(rng.uniform(8))};
    for (const auto& [id, doc] : snapshot_at(h, t)) {
      for (const auto& path : enumerate_cells(doc)) {
        CHECK(*get_cell(doc, path) == value_at(h, id, path, t));
      }
    }
  }
}

TEST_CASE("history serialization round trips") {
  DataHistory h;
  {
    EntityHistory e = make_entity(0, Timestamp{0});
    e.deleted_at = Timestamp{9};
    auto& cell = e.cell(CellPath::parse("name"));
    cell.versions.push_back({Value("a"), Timestamp{0}, Timestamp{4}});
    cell.versions.push_back({Value("b"), Timestamp{4}, Timestamp{9}});
    e.cell(CellPath::parse("score")).versions.push_back(
        {Value(*Decimal::parse("0.25")), Timestamp{0}, Timestamp{9}});
    h.add(std::move(e));
  }
  {
    EntityHistory e = make_entity(4, Timestamp{2});
    e.cell(CellPath::parse("name")).versions.push_back({Value("c"), Timestamp{2}, kOpenEnd});
    h.add(std::move(e));
  }

  std::ostringstream out;
  write_history(out, h);
  std::istringstream in(out.str());
  DataHistory back = read_history(in);

  REQUIRE(back.entities().size() == 2);
  CHECK(back.entities()[0].deleted_at == Timestamp{9});
  CHECK(value_at(back, 0, CellPath::parse("name"), Timestamp{5}).as_text() == "b");
  CHECK(value_at(back, 0, CellPath::parse("score"), Timestamp{0}).as_number() ==
        *Decimal::parse("0.25"));

  std::ostringstream again;
  write_history(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("validate_history reports unique violations at their start") {
  EnrichedSchema schema;
  schema.schema.attributes.push_back({CellPath::parse("key"), {}, ValueKind::Text, false});
  Constraint unique;
  unique.kind = Constraint::Kind::Unique;
  unique.paths = {CellPath::parse("key")};
  schema.constraints.push_back(unique);

  DataHistory h;
  {
    EntityHistory e = make_entity(1, Timestamp{0});
    e.cell(CellPath::parse("key")).versions.push_back({Value("k1"), Timestamp{0}, kOpenEnd});
    h.add(std::move(e));
  }
  {
    EntityHistory e = make_entity(2, Timestamp{0});
    auto& cell = e.cell(CellPath::parse("key"));
    cell.versions.push_back({Value("k2"), Timestamp{0}, Timestamp{3}});
    cell.versions.push_back({Value("k1"), Timestamp{3}, Timestamp{5}});  // collides in [3,5)
    cell.versions.push_back({Value("k3"), Timestamp{5}, kOpenEnd});
    h.add(std::move(e));
  }

  auto violations = validate_history(h, schema);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].at == Timestamp{3});
  CHECK(violations[0].entities == std::vector<EntityId>{1, 2});

  // empty history has nothing to violate
  CHECK(validate_history(DataHistory{}, schema).empty());
}

TEST_CASE("validate_history flags temporal key reuse after deletion") {
  EnrichedSchema schema;
  Constraint tu;
  tu.kind = Constraint::Kind::TemporalUnique;
  tu.paths = {CellPath::parse("key")};
  schema.constraints.push_back(tu);

  DataHistory h;
  {
    EntityHistory e = make_entity(1, Timestamp{0});
    e.deleted_at = Timestamp{4};
    e.cell(CellPath::parse("key")).versions.push_back({Value("k"), Timestamp{0}, Timestamp{4}});
    h.add(std::move(e));
  }
  {
    EntityHistory e = make_entity(2, Timestamp{6});
    e.cell(CellPath::parse("key")).versions.push_back({Value("k"), Timestamp{6}, kOpenEnd});
    h.add(std::move(e));
  }

  auto violations = validate_history(h, schema);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].at == Timestamp{6});

  // the same key kept by the same entity contiguously is not a reuse
  DataHistory ok;
  {
    EntityHistory e = make_entity(1, Timestamp{0});
    auto& cell = e.cell(CellPath::parse("key"));
    cell.versions.push_back({Value("k"), Timestamp{0}, Timestamp{5}});
    cell.versions.push_back({Value("k"), Timestamp{5}, kOpenEnd});
    ok.add(std::move(e));
  }
  CHECK(validate_history(ok, schema).empty());
}

TEST_CASE("validate_history checks functional dependencies over time") {
  EnrichedSchema schema;
  Constraint fd;
  fd.kind = Constraint::Kind::FunctionalDependency;
  fd.lhs = {CellPath::parse("city")};
  fd.rhs = {CellPath::parse("state")};
  schema.constraints.push_back(fd);

  DataHistory h;
  {
    EntityHistory e = make_entity(1, Timestamp{0});
    e.cell(CellPath::parse("city")).versions.push_back({Value("X"), Timestamp{0}, kOpenEnd});
    e.cell(CellPath::parse("state")).versions.push_back({Value("S1"), Timestamp{0}, kOpenEnd});
    h.add(std::move(e));
  }
  {
    EntityHistory e = make_entity(2, Timestamp{0});
    e.cell(CellPath::parse("city")).versions.push_back({Value("X"), Timestamp{0}, kOpenEnd});
    auto& state = e.cell(CellPath::parse("state"));
    state.versions.push_back({Value("S1"), Timestamp{0}, Timestamp{7}});
    state.versions.push_back({Value("S2"), Timestamp{7}, kOpenEnd});  // breaks FD at 7
    h.add(std::move(e));
  }

  auto violations = validate_history(h, schema);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].at == Timestamp{7});
}

TEST_CASE("random stream is key-derived and order-independent") {
  RandomStream a(42);
  RandomStream b(42);
  CHECK(a.derive("x").next_u64() == b.derive("x").next_u64());
  CHECK(a.derive("x").next_u64() != a.derive("y").next_u64());

  // deriving is independent of draw order on the parent
  RandomStream c(7);
  c.next_u64();
  CHECK(c.derive("tag").next_u64() == RandomStream(7).derive("tag").next_u64());

  // uniform stays in range and hits both halves
  RandomStream d(1);
  bool low = false, high = false;
  for (int i = 0; i < 100; ++i) {
    auto v = d.uniform(10);
    CHECK(v < 10);
    (v < 5 ? low : high) = true;
  }
  CHECK(low);
  CHECK(high);
}
