#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>

#include "eirep/eirep.h"

namespace {

const std::string kFixtures = EIREP_FIXTURES;

std::string take(char* s) {
  std::string out = s ? s : "";
  eirep_string_free(s);
  return out;
}

eirep_category* load(const std::string& rel) {
  eirep_category* c = nullptr;
  REQUIRE(eirep_category_load((kFixtures + "/" + rel).c_str(), &c) == EIREP_OK);
  return c;
}

}  // namespace

TEST_CASE("load, inspect and free a category") {
  auto* c = load("categories/fix-a.json");
  CHECK(eirep_category_object_count(c) == 2);
  CHECK(eirep_category_morphism_count(c) == 2 + 6 + 6);
  CHECK(std::strcmp(eirep_category_object_name(c, 1), "y") == 0);
  CHECK(eirep_category_object_name(c, 2) == nullptr);
  int ok = 0;
  char* report = nullptr;
  CHECK(eirep_category_validate(c, &ok, &report) == EIREP_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("\"ok\": true") != std::string::npos);
  char* info = nullptr;
  CHECK(eirep_category_info(c, &info) == EIREP_OK);
  CHECK(take(info).find("x -> y: 6 morphisms, 1 orbit") != std::string::npos);
  eirep_category_free(c);
}

TEST_CASE("error codes and thread-local messages") {
  eirep_category* c = nullptr;
  CHECK(eirep_category_load(nullptr, &c) == EIREP_ERR_ARGUMENT);
  CHECK(eirep_category_load((kFixtures + "/nope.json").c_str(), &c) == EIREP_ERR_IO);
  CHECK(c == nullptr);
  CHECK(eirep_category_load((kFixtures + "/invalid/malformed.json").c_str(), &c) == EIREP_ERR_PARSE);
  CHECK(eirep_last_error_line() == 5);
  CHECK(eirep_last_error_column() == 13);
  const std::string main_error = eirep_last_error();
  CHECK(main_error.find("line 5") != std::string::npos);

  std::string other_error;
  std::size_t other_line = 99;
  std::thread t([&] {
    other_error = eirep_last_error();
    other_line = eirep_last_error_line();
    eirep_category* d = nullptr;
    eirep_category_parse("{\"schema\": 1}", &d);
  });
  t.join();
  CHECK(other_error.empty());
  CHECK(other_line == 0);
  CHECK(eirep_last_error() == main_error);

  CHECK(eirep_category_load((kFixtures + "/invalid/broken-associativity.json").c_str(), &c) == EIREP_OK);
  int ok = 1;
  char* report = nullptr;
  CHECK(eirep_category_validate(c, &ok, &report) == EIREP_OK);
  CHECK(ok == 0);
  CHECK(take(report).find("(s, s, f2)") != std::string::npos);
  eirep_verdict* v = nullptr;
  CHECK(eirep_decide(c, 0, 0, 0, &v) == EIREP_ERR_STRUCTURAL);
  CHECK(v == nullptr);
  eirep_category_free(c);
  CHECK(std::string(eirep_last_error()).empty() == false);
}

TEST_CASE("decide through the C API and round trip the verdict") {
  auto* c = load("categories/fix-a.json");
  eirep_verdict* v = nullptr;
  REQUIRE(eirep_decide(c, 0, 0, 0, &v) == EIREP_OK);
  CHECK(eirep_verdict_outcome(v) == EIREP_FINITE);
  char* doc = nullptr;
  REQUIRE(eirep_verdict_json(v, &doc) == EIREP_OK);
  const auto text = take(doc);
  eirep_verdict* back = nullptr;
  REQUIRE(eirep_verdict_parse(text.c_str(), &back) == EIREP_OK);
  CHECK(eirep_verdict_equal(v, back) == 1);
  eirep_verdict* bad = nullptr;
  CHECK(eirep_verdict_parse("{\"outcome\": 3}", &bad) == EIREP_ERR_PARSE);
  CHECK(eirep_decide(c, 4, 0, 0, &bad) == EIREP_ERR_INPUT);
  eirep_verdict_free(back);
  eirep_verdict_free(v);
  eirep_category_free(c);
}

TEST_CASE("ordinary quiver through the C API") {
  auto* c = load("categories/fix-a.json");
  eirep_quiver* q = nullptr;
  REQUIRE(eirep_ordinary_quiver(c, 0, 0, &q) == EIREP_OK);
  CHECK(eirep_quiver_vertex_count(q) == 5);
  CHECK(eirep_quiver_arrow_count(q) == 4);
  char* edges = nullptr;
  REQUIRE(eirep_quiver_edge_list(q, &edges) == EIREP_OK);
  CHECK(take(edges).find("x:S0 y:S2\n") != std::string::npos);
  eirep_quiver_free(q);
  CHECK(eirep_ordinary_quiver(c, 3, 0, &q) == EIREP_ERR_PRECONDITION);
  CHECK(eirep_ordinary_quiver(c, 13, 0, &q) == EIREP_OK);
  eirep_quiver_free(q);
  eirep_category_free(c);
}

TEST_CASE("induce and restrict through the C API") {
  auto* c = load("categories/c2-fixed-point.json");
  eirep_subcategory* d = nullptr;
  REQUIRE(eirep_subcategory_load(c, (kFixtures + "/induce/c2-fixed-point.sub.json").c_str(), &d) == EIREP_OK);
  eirep_rep* n = nullptr;
  REQUIRE(eirep_rep_load(d, (kFixtures + "/induce/c2-fixed-point.rep.json").c_str(), &n) == EIREP_OK);
  eirep_rep* up = nullptr;
  REQUIRE(eirep_induce(n, d, &up) == EIREP_OK);
  CHECK(eirep_rep_dim(up, 0) == 1);
  CHECK(eirep_rep_dim(up, 1) == 1);
  eirep_rep* back = nullptr;
  REQUIRE(eirep_restrict(up, d, &back) == EIREP_OK);
  int iso = 0;
  CHECK(eirep_rep_isomorphic(back, n, 0, &iso) == EIREP_OK);
  CHECK(iso == 1);
  CHECK(eirep_rep_isomorphic(up, n, 0, &iso) == EIREP_ERR_ARGUMENT);
  eirep_rep* wrong = nullptr;
  CHECK(eirep_induce(up, d, &wrong) == EIREP_ERR_ARGUMENT);
  char* text = nullptr;
  REQUIRE(eirep_rep_text(up, &text) == EIREP_OK);
  CHECK(take(text).rfind("x:1 y:1\n", 0) == 0);
  eirep_rep_free(back);
  eirep_rep_free(up);
  eirep_rep_free(n);
  eirep_subcategory_free(d);
  eirep_category_free(c);
}
