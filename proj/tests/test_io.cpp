#include <doctest.h>

#include <filesystem>
#include <random>

#include "eirep/decider.hpp"
#include "eirep/io.hpp"
#include "support.hpp"

using namespace eirep;
using json = nlohmann::json;

namespace {

const std::string kFixtures = EIREP_FIXTURES;

// Same objects, morphism names, endpoints and composition table.
bool same_category(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.object_names() != b.object_names() || a.morphism_count() != b.morphism_count()) return false;
  std::vector<std::size_t> to_b(a.morphism_count());
  for (std::size_t m = 0; m < a.morphism_count(); ++m) {
    auto i = b.morphism_index(a.morphism(m).name);
    if (!i) return false;
    to_b[m] = *i;
    if (a.morphism(m).src != b.morphism(*i).src || a.morphism(m).tgt != b.morphism(*i).tgt) return false;
  }
  for (std::size_t g = 0; g < a.morphism_count(); ++g)
    for (std::size_t f = 0; f < a.morphism_count(); ++f) {
      const auto ab = a.compose(g, f), bb = b.compose(to_b[g], to_b[f]);
      if ((ab < 0) != (bb < 0)) return false;
      if (ab >= 0 && to_b[static_cast<std::size_t>(ab)] != static_cast<std::size_t>(bb)) return false;
    }
  return true;
}

ParseError parse_error_of(const std::string& text) {
  try {
    category_from_json(parse_json(text));
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"schema\": \"eirep-category/1\",\n  \"kind\": explicit\n}\n";
  auto e = parse_error_of(text);
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
  CHECK(std::string(e.what()).find("line 3, column 11") != std::string::npos);
  auto trailing = parse_error_of("{\"a\": 1,}");
  CHECK(trailing.line() == 1);
  CHECK(trailing.column() == 9);
}

TEST_CASE("schema errors name the JSON path") {
  auto e = parse_error_of(R"({"schema": "eirep-category/2", "kind": "explicit"})");
  CHECK(e.path() == "/schema");
  e = parse_error_of(R"({"schema": "eirep-category/1", "kind": "graph"})");
  CHECK(e.path() == "/kind");
  e = parse_error_of(R"({"schema": "eirep-category/1", "kind": "ei_quiver",
    "objects": [{"name": "x", "generators": [[1, 1]]}]})");
  CHECK(e.path() == "/objects/0/generators/0");
  e = parse_error_of(R"({"schema": "eirep-category/1", "kind": "ei_quiver",
    "objects": [{"name": "x"}, {"name": "x"}]})");
  CHECK(e.path() == "/objects/1");
  e = parse_error_of(R"({"schema": "eirep-category/1", "kind": "explicit", "objects": ["x"],
    "morphisms": [{"id": "1x", "src": "x", "tgt": "x"}], "identities": {}})");
  CHECK(e.path() == "/identities");
  e = parse_error_of(R"({"schema": "eirep-category/1", "kind": "explicit", "objects": ["x"],
    "morphisms": [{"id": "1x", "src": "x", "tgt": "x"}, {"id": "s", "src": "x", "tgt": "x"}],
    "identities": {"x": "1x"}, "composition": [["s", "s", "1x"], ["s", "s", "s"]]})");
  CHECK(e.path() == "/composition/1");
}

TEST_CASE("biset documents that break the action laws are structural errors") {
  const std::string text = R"({"schema": "eirep-category/1", "kind": "ei_quiver",
    "objects": [{"name": "x", "generators": [[1, 0]]}, {"name": "y", "generators": [[1, 2, 0]]}],
    "arrows": [{"name": "a", "src": "x", "tgt": "y", "points": 2, "left": [[1, 0]], "right": [[1, 0]]}]})";
  CHECK_THROWS_AS(category_from_json(parse_json(text)), StructuralError);
}

TEST_CASE("EI quiver documents round trip" * doctest::description("property, 200 cases")) {
  std::mt19937_64 rng(5);
  auto menu = eirep::testing::group_menu();
  for (int trial = 0; trial < 200; ++trial) {
    EIQuiver q;
    const std::size_t n = 2 + rng() % 2;
    for (std::size_t x = 0; x < n; ++x) {
      q.objects.push_back("o" + std::to_string(x));
      q.groups.push_back(menu[rng() % menu.size()]);
    }
    for (std::size_t x = 0; x + 1 < n; ++x)
      q.arrows.push_back(EIArrow{"a" + std::to_string(x), x, x + 1,
                                 eirep::testing::random_transitive_biset(q.groups[x + 1], q.groups[x], rng)});
    auto text = to_json(q).dump();
    auto doc = category_from_json(parse_json(text));
    REQUIRE(doc.quiver);
    CHECK(doc.kind == "ei_quiver");
    CHECK(same_category(*doc.category, *free_ei_cover(q).category));
    CHECK(to_json(*doc.quiver).dump() == text);
    // Explicit export of the cover reloads to the same table.
    auto expl = category_from_json(parse_json(to_json(*doc.category).dump()));
    CHECK(expl.kind == "explicit");
    CHECK(same_category(*expl.category, *doc.category));
  }
}

TEST_CASE("fixture corpus loads") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures + "/categories")) {
    CAPTURE(entry.path().string());
    auto doc = load_category(entry.path().string());
    CHECK(validate_ei(*doc.category).category_ok);
    ++count;
  }
  CHECK(count >= 20);
  CHECK_THROWS_AS(load_category(kFixtures + "/invalid/malformed.json"), ParseError);
  CHECK_THROWS_AS(load_category(kFixtures + "/invalid/unknown-object.json"), ParseError);
  CHECK_THROWS_AS(load_category(kFixtures + "/missing.json"), InputError);
  auto broken = load_category(kFixtures + "/invalid/broken-associativity.json");
  auto issues = structure_issues(*broken.category);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues[0].kind == "associativity");
  CHECK(issues[0].detail.find("(s, s, f2)") != std::string::npos);
}

TEST_CASE("subcategory and representation documents") {
  auto doc = load_category(kFixtures + "/categories/fix-b.json");
  auto d = subcategory_from_json(parse_json(read_file(kFixtures + "/induce/fix-b.sub.json")), *doc.category);
  CHECK(d.category->morphism_count() == 4);
  auto n = rep_from_json(parse_json(read_file(kFixtures + "/induce/fix-b.rep.json")), d.category);
  CHECK(n.field.order() == 5);
  CHECK(n.dims == std::vector<std::size_t>{1, 1});
  auto again = rep_from_json(to_json(n), d.category);
  CHECK(again.mats == n.mats);

  auto full = subcategory_from_json(json{{"schema", kSubcategorySchema}, {"objects", {"y"}}}, *doc.category);
  CHECK(full.category->object_count() == 1);
  CHECK(full.category->morphism_count() == 2);
  CHECK_THROWS_AS(subcategory_from_json(json{{"schema", kSubcategorySchema}, {"objects", {"q"}}}, *doc.category),
                  ParseError);

  json bad = to_json(n);
  bad["maps"]["a#0"] = json::array({json::array({7})});
  CHECK_THROWS_AS(rep_from_json(bad, d.category), ParseError);
  bad = to_json(n);
  bad["maps"]["a#0"] = json::array({json::array({1, 1})});
  CHECK_THROWS_AS(rep_from_json(bad, d.category), ParseError);
}

TEST_CASE("extension field representations keep their modulus") {
  auto doc = load_category(kFixtures + "/categories/trivial-chain.json");
  json j{{"schema", kRepSchema},
         {"field", {{"characteristic", 2}, {"degree", 2}, {"modulus", {1, 1, 1}}}},
         {"dims", {{"x", 1}, {"y", 1}, {"z", 0}}},
         {"maps", {{"a", {{3}}}, {"b", json::array()}}}};
  auto r = rep_from_json(j, doc.category);
  CHECK(r.field.order() == 4);
  CHECK(r.field.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(rep_from_json(to_json(r), doc.category).field == r.field);
}

TEST_CASE("atomic writes replace the target") {
  const auto path = (std::filesystem::temp_directory_path() / "eirep-io-test.txt").string();
  write_file_atomic(path, "one");
  write_file_atomic(path, "two");
  CHECK(read_file(path) == "two");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove(path);
}
