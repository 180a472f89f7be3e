#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "eirep/eirep.h"

namespace fs = std::filesystem;

namespace {

const std::string kFixtures = EIREP_FIXTURES;
const std::string kCli = EIREP_CLI;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when `merge` is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  const auto cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& rel) { return "'" + kFixtures + "/" + rel + "'"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "eirep-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run("validate " + fixture("categories/fix-a.json")).code == 0);
  auto broken = run("validate " + fixture("invalid/broken-associativity.json"), true);
  CHECK(broken.code == 1);
  CHECK(broken.out.find("(s, s, f2)") != std::string::npos);
  auto malformed = run("validate " + fixture("invalid/malformed.json"), true);
  CHECK(malformed.code == 2);
  CHECK(malformed.out.find("line 5, column 13") != std::string::npos);
  CHECK(run("validate " + fixture("invalid/unknown-object.json")).code == 2);
  CHECK(run("validate " + fixture("does-not-exist.json")).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("decide exit codes partition the outcomes") {
  auto a = run("decide --char 0 " + fixture("categories/fix-a.json"));
  CHECK(a.code == 0);
  CHECK(a.out.find("decided by: S2 (") != std::string::npos);
  CHECK(a.out.find("field: GF(7)") != std::string::npos);
  auto e = run("decide " + fixture("categories/fix-e.json"));
  CHECK(e.code == 10);
  CHECK(e.out.find("decided by: N2") != std::string::npos);
  CHECK(e.out.find("\"representatives\":[\"a\",\"b\"]") != std::string::npos);
  auto u = run("decide --char 2 " + fixture("categories/fix-a.json"));
  CHECK(u.code == 20);
  CHECK(u.out.find("needs strengthening:") != std::string::npos);
  CHECK(run("decide --char 4 " + fixture("categories/fix-a.json")).code == 2);
  CHECK(run("decide").code == 2);
}

TEST_CASE("verdict JSON re-parses into an equal verdict") {
  const auto out = scratch("fix-a.verdict.json");
  REQUIRE(run("decide --char 0 --json '" + out.string() + "' " + fixture("categories/fix-a.json")).code == 0);
  const auto text = slurp(out);
  eirep_verdict* v = nullptr;
  REQUIRE(eirep_verdict_parse(text.c_str(), &v) == EIREP_OK);
  CHECK(eirep_verdict_outcome(v) == EIREP_FINITE);
  char* again = nullptr;
  REQUIRE(eirep_verdict_json(v, &again) == EIREP_OK);
  CHECK(std::string(again) == text);
  eirep_string_free(again);
  eirep_verdict_free(v);
}

TEST_CASE("output bytes are deterministic and the seed comes from the environment") {
  const auto args = "decide --char 5 --extended " + fixture("categories/abelian-n2.json");
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(run(args, false, "EIREP_SEED=17").out == run(args + " --seed 17").out);
  const auto quiver = "ordinary-quiver " + fixture("categories/fix-a.json");
  CHECK(run(quiver).out == run(quiver, false, "EIREP_SEED=3").out);
}

TEST_CASE("batch decide writes one verdict per file") {
  const auto dir = scratch("batch");
  fs::remove_all(dir);
  auto r = run("decide --char 5 --all " + fixture("categories") + " --json '" + dir.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("fix-e.json: outcome: infinite") != std::string::npos);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().string().find(".verdict.json") != std::string::npos);
    ++files;
  }
  CHECK(files >= 20);
  CHECK(run("decide --all " + fixture("invalid")).code == 2);
}

TEST_CASE("ordinary-quiver listing, edge list and precondition") {
  const auto edges = scratch("fix-a.edges");
  auto r = run("ordinary-quiver --char auto --edges '" + edges.string() + "' " + fixture("categories/fix-a.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices: 5") != std::string::npos);
  CHECK(r.out.find("arrows: 4") != std::string::npos);
  CHECK(r.out.find("components: A5") != std::string::npos);
  const auto list = slurp(edges);
  CHECK(list.find("x:S1 y:S2\n") != std::string::npos);
  auto chain = run("ordinary-quiver " + fixture("categories/trivial-chain.json"));
  CHECK(chain.out.find("x:S0 -> y:S0\n  y:S0 -> z:S0\n") != std::string::npos);
  auto bad = run("ordinary-quiver --char 3 " + fixture("categories/fix-a.json"), true);
  CHECK(bad.code == 3);
  CHECK(bad.out.find("invertible") != std::string::npos);
}

TEST_CASE("induce prints the dimension vector first") {
  auto b = run("induce " + fixture("categories/fix-b.json") + " " + fixture("induce/fix-b.sub.json") + " " +
               fixture("induce/fix-b.rep.json"));
  CHECK(b.code == 0);
  CHECK(b.out.rfind("x:1 y:0\n", 0) == 0);
  auto c = run("induce " + fixture("categories/c2-fixed-point.json") + " " + fixture("induce/c2-fixed-point.sub.json") +
               " " + fixture("induce/c2-fixed-point.rep.json"));
  CHECK(c.out.rfind("x:1 y:1\n", 0) == 0);
  auto mismatched = run("induce " + fixture("categories/fix-a.json") + " " + fixture("induce/c2-fixed-point.sub.json") +
                         " " + fixture("induce/c2-fixed-point.rep.json"),
                         true);
  CHECK(mismatched.code == 2);
  CHECK(mismatched.out.find("unknown morphism \"a\"") != std::string::npos);
}

TEST_CASE("info summarizes the category") {
  auto r = run("info " + fixture("categories/fix-f.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("free: no") != std::string::npos);
  CHECK(r.out.find("a->b a->c b->d c->d") != std::string::npos);
}
