#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eirep/eirep.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;
constexpr int kExitInfinite = 10;
constexpr int kExitUnknown = 20;

struct Freer {
  void operator()(eirep_category* p) const { eirep_category_free(p); }
  void operator()(eirep_verdict* p) const { eirep_verdict_free(p); }
  void operator()(eirep_quiver* p) const { eirep_quiver_free(p); }
  void operator()(eirep_subcategory* p) const { eirep_subcategory_free(p); }
  void operator()(eirep_rep* p) const { eirep_rep_free(p); }
  void operator()(char* p) const { eirep_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

int exit_code(eirep_status s) {
  switch (s) {
    case EIREP_OK:
      return kExitOk;
    case EIREP_ERR_ARGUMENT:
    case EIREP_ERR_IO:
    case EIREP_ERR_PARSE:
    case EIREP_ERR_INPUT:
      return kExitParse;
    case EIREP_ERR_STRUCTURAL:
      return kExitInvalid;
    case EIREP_ERR_PRECONDITION:
    case EIREP_ERR_FIELD:
      return kExitPrecondition;
    default:
      return kExitInternal;
  }
}

int report(eirep_status s, const std::string& context) {
  std::cerr << "error: " << context << ": " << eirep_last_error() << "\n";
  return exit_code(s);
}

std::string take(char* s) {
  Owned<char> owned(s);
  return s ? std::string(s) : std::string();
}

bool write_atomic(const fs::path& path, const std::string& content) {
  const auto tmp = fs::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content) || !out.flush()) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return !ec;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("EIREP_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring EIREP_SEED=" << env << "\n";
    return 0;
  }
}

int load(const std::string& path, Owned<eirep_category>& out) {
  eirep_category* c = nullptr;
  const auto s = eirep_category_load(path.c_str(), &c);
  out.reset(c);
  return s == EIREP_OK ? kExitOk : report(s, path);
}

int cmd_validate(const std::string& path) {
  Owned<eirep_category> c;
  if (int rc = load(path, c)) return rc;
  int ok = 0;
  char* text = nullptr;
  if (auto s = eirep_category_validate(c.get(), &ok, &text)) return report(s, path);
  std::cout << take(text) << "\n";
  return ok ? kExitOk : kExitInvalid;
}

struct DecideFlags {
  std::uint32_t p = 0;
  bool extended = false;
  std::uint64_t seed = 0;
  std::string json_out;
};

int decide_one(const std::string& path, const DecideFlags& f, const std::string& json_out, bool brief) {
  Owned<eirep_category> c;
  if (int rc = load(path, c)) return rc;
  eirep_verdict* raw = nullptr;
  if (auto s = eirep_decide(c.get(), f.p, f.extended ? 1 : 0, f.seed, &raw)) return report(s, path);
  Owned<eirep_verdict> v(raw);
  char* text = nullptr;
  if (auto s = eirep_verdict_text(v.get(), &text)) return report(s, path);
  const auto body = take(text);
  if (brief)
    std::cout << path << ": " << body.substr(0, body.find('\n')) << "\n";
  else
    std::cout << body;
  if (!json_out.empty()) {
    char* doc = nullptr;
    if (auto s = eirep_verdict_json(v.get(), &doc)) return report(s, path);
    if (!write_atomic(json_out, take(doc))) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return kExitParse;
    }
  }
  switch (eirep_verdict_outcome(v.get())) {
    case EIREP_FINITE:
      return kExitOk;
    case EIREP_INFINITE:
      return kExitInfinite;
    default:
      return kExitUnknown;
  }
}

int cmd_decide(const std::string& path, const std::string& dir, const DecideFlags& f) {
  if (dir.empty()) return decide_one(path, f, f.json_out, false);
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    std::cerr << "error: cannot list " << dir << "\n";
    return kExitParse;
  }
  std::sort(files.begin(), files.end());
  if (!f.json_out.empty()) fs::create_directories(f.json_out, ec);
  int worst = kExitOk;
  for (const auto& file : files) {
    const auto out = f.json_out.empty() ? std::string()
                                        : (fs::path(f.json_out) / (file.stem().string() + ".verdict.json")).string();
    const int rc = decide_one(file.string(), f, out, true);
    if (rc != kExitOk && rc != kExitInfinite && rc != kExitUnknown) worst = std::max(worst, rc);
  }
  return worst;
}

int cmd_ordinary_quiver(const std::string& path, const std::string& chr, std::uint64_t seed, const std::string& edges) {
  std::uint32_t ell = 0;
  if (chr != "auto") {
    try {
      ell = static_cast<std::uint32_t>(std::stoul(chr));
    } catch (const std::exception&) {
      std::cerr << "error: --char expects auto or a prime\n";
      return kExitParse;
    }
    if (ell == 0) {
      std::cerr << "error: --char 0 is realized by a splitting prime; use --char auto\n";
      return kExitParse;
    }
  }
  Owned<eirep_category> c;
  if (int rc = load(path, c)) return rc;
  eirep_quiver* raw = nullptr;
  if (auto s = eirep_ordinary_quiver(c.get(), ell, seed, &raw)) {
    if (s == EIREP_ERR_PRECONDITION || s == EIREP_ERR_FIELD)
      std::cerr << "the ordinary quiver needs every automorphism group order to be invertible in a splitting field\n";
    return report(s, path);
  }
  Owned<eirep_quiver> q(raw);
  char* text = nullptr;
  if (auto s = eirep_quiver_text(q.get(), &text)) return report(s, path);
  std::cout << take(text);
  if (!edges.empty()) {
    char* list = nullptr;
    if (auto s = eirep_quiver_edge_list(q.get(), &list)) return report(s, path);
    if (!write_atomic(edges, take(list))) {
      std::cerr << "error: cannot write " << edges << "\n";
      return kExitParse;
    }
  }
  return kExitOk;
}

int cmd_induce(const std::string& cat_path, const std::string& sub_path, const std::string& rep_path,
               const std::string& json_out) {
  Owned<eirep_category> c;
  if (int rc = load(cat_path, c)) return rc;
  eirep_subcategory* d_raw = nullptr;
  if (auto s = eirep_subcategory_load(c.get(), sub_path.c_str(), &d_raw)) return report(s, sub_path);
  Owned<eirep_subcategory> d(d_raw);
  eirep_rep* n_raw = nullptr;
  if (auto s = eirep_rep_load(d.get(), rep_path.c_str(), &n_raw)) return report(s, rep_path);
  Owned<eirep_rep> n(n_raw);
  eirep_rep* up_raw = nullptr;
  if (auto s = eirep_induce(n.get(), d.get(), &up_raw)) return report(s, "induction");
  Owned<eirep_rep> up(up_raw);
  char* text = nullptr;
  if (auto s = eirep_rep_text(up.get(), &text)) return report(s, "induction");
  std::cout << take(text);
  if (!json_out.empty()) {
    char* doc = nullptr;
    if (auto s = eirep_rep_json(up.get(), &doc)) return report(s, "induction");
    if (!write_atomic(json_out, take(doc))) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return kExitParse;
    }
  }
  return kExitOk;
}

int cmd_info(const std::string& path) {
  Owned<eirep_category> c;
  if (int rc = load(path, c)) return rc;
  char* text = nullptr;
  if (auto s = eirep_category_info(c.get(), &text)) return report(s, path);
  std::cout << take(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite EI categories: structure, ordinary quivers and representation type"};
  app.set_version_flag("--version", std::string(eirep_version()));
  app.require_subcommand(1);

  std::string path;
  const std::uint64_t env_seed = default_seed();

  auto* validate = app.add_subcommand("validate", "check the category axioms and the EI property");
  validate->add_option("file", path, "category document")->required();

  DecideFlags df;
  df.seed = env_seed;
  std::string dir;
  auto* decide = app.add_subcommand("decide", "decide the representation type (exit 0 finite, 10 infinite, 20 unknown)");
  decide->add_option("file", path, "category document");
  decide->add_option("--char", df.p, "characteristic: 0 or a prime")->default_val(0);
  decide->add_flag("--extended", df.extended, "also run the induced-top checks");
  decide->add_option("--seed", df.seed, "random seed (default $EIREP_SEED or 0)");
  decide->add_option("--json", df.json_out, "write the verdict document here (a directory with --all)");
  decide->add_option("--all", dir, "decide every *.json file in a directory");

  std::string chr = "auto", edges;
  std::uint64_t oq_seed = env_seed;
  auto* oq = app.add_subcommand("ordinary-quiver", "ordinary quiver of the category algebra");
  oq->add_option("file", path, "category document")->required();
  oq->add_option("--char", chr, "auto or a prime not dividing any group order")->default_val("auto");
  oq->add_option("--seed", oq_seed, "random seed (default $EIREP_SEED or 0)");
  oq->add_option("--edges", edges, "also write the quiver as an edge list");

  std::string sub_path, rep_path, rep_out;
  auto* induce = app.add_subcommand("induce", "induce a representation from a subcategory");
  induce->add_option("category", path, "category document")->required();
  induce->add_option("subcategory", sub_path, "subcategory document")->required();
  induce->add_option("rep", rep_path, "representation document over the subcategory")->required();
  induce->add_option("--json", rep_out, "write the induced representation document here");

  auto* info = app.add_subcommand("info", "summarize groups, hom sets and the underlying quiver");
  info->add_option("file", path, "category document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  if (*validate) return cmd_validate(path);
  if (*decide) {
    if (path.empty() == dir.empty()) {
      std::cerr << "error: decide needs exactly one of a file or --all DIR\n";
      return kExitParse;
    }
    return cmd_decide(path, dir, df);
  }
  if (*oq) return cmd_ordinary_quiver(path, chr, oq_seed, edges);
  if (*induce) return cmd_induce(path, sub_path, rep_path, rep_out);
  if (*info) return cmd_info(path);
  return kExitParse;
}
