#include "eirep/eirep.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "eirep/catalg.hpp"
#include "eirep/decider.hpp"
#include "eirep/io.hpp"
#include "eirep/ordinary_quiver.hpp"

struct eirep_category {
  eirep::CategoryDocument doc;
};

struct eirep_subcategory {
  eirep::CategoryPtr ambient;
  eirep::Embedding embedding;
};

struct eirep_rep {
  eirep::CatRep rep;
};

struct eirep_verdict {
  eirep::Verdict verdict;
};

struct eirep_quiver {
  eirep::OrdinaryQuiver quiver;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0, last_column = 0;

eirep_status set_error(eirep_status s, const std::string& message, std::size_t line = 0, std::size_t column = 0) {
  last_error = message;
  last_line = line;
  last_column = column;
  return s;
}

template <class F>
eirep_status guarded(F&& body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    body();
    return EIREP_OK;
  } catch (const eirep::ParseError& e) {
    return set_error(EIREP_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const eirep::InputError& e) {
    return set_error(EIREP_ERR_INPUT, e.what());
  } catch (const eirep::StructuralError& e) {
    return set_error(EIREP_ERR_STRUCTURAL, e.what());
  } catch (const eirep::PreconditionError& e) {
    return set_error(EIREP_ERR_PRECONDITION, e.what());
  } catch (const eirep::FieldNotSplittingError& e) {
    return set_error(EIREP_ERR_FIELD, e.what());
  } catch (const eirep::ResourceError& e) {
    return set_error(EIREP_ERR_RESOURCE, e.what());
  } catch (const eirep::ConsistencyError& e) {
    return set_error(EIREP_ERR_CONSISTENCY, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EIREP_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EIREP_ERR_INTERNAL, e.what());
  }
}

eirep_status null_argument(const char* what) { return set_error(EIREP_ERR_ARGUMENT, std::string(what) + " is null"); }

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Unreadable files are IO errors rather than input errors.
std::string read_or_io(const std::string& path, eirep_status& status) {
  try {
    return eirep::read_file(path);
  } catch (const eirep::InputError& e) {
    status = set_error(EIREP_ERR_IO, e.what());
    return {};
  }
}

std::string text_of(const eirep::Verdict& v) {
  std::ostringstream out;
  out << "outcome: " << eirep::to_string(v.outcome) << "\n";
  out << "characteristic: " << v.char_p << "\n";
  if (!v.field_used.empty()) out << "field: " << v.field_used << "\n";
  if (const auto* d = v.deciding()) out << "decided by: " << d->rule << " (" << d->citation << ")\n";
  if (v.outcome == eirep::Outcome::Unknown && !v.trace.empty() && v.trace.back().rule == "OPEN")
    out << "needs strengthening: " << v.trace.back().witness.value("hint", "") << "\n";
  out << "trace:\n";
  for (const auto& r : v.trace) {
    out << "  " << r.rule << " " << eirep::to_string(r.status);
    if (!r.scope.empty()) out << " [" << r.scope << "]";
    out << ": " << r.citation << "\n";
    if (!r.witness.empty()) out << "      " << r.witness.dump() << "\n";
  }
  return out.str();
}

std::string vertex_label(const eirep::OrdinaryQuiver& q, std::size_t v) {
  const auto& vx = q.vertices[v];
  return q.objects[vx.object] + ":S" + std::to_string(vx.simple);
}

std::string text_of(const eirep::OrdinaryQuiver& q) {
  std::ostringstream out;
  out << "field: " << q.field.describe() << "\n";
  out << "vertices: " << q.vertices.size() << "\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    out << "  " << vertex_label(q, v) << " dim " << q.vertices[v].dim << (q.vertices[v].trivial ? " trivial" : "")
        << "\n";
  out << "arrows: " << q.arrow_count() << "\n";
  for (const auto& a : q.arrows) {
    out << "  " << vertex_label(q, a.src) << " -> " << vertex_label(q, a.tgt);
    if (a.multiplicity > 1) out << " x" << a.multiplicity;
    out << "\n";
  }
  const auto report = eirep::dynkin_classify(q);
  out << "components:";
  for (const auto& comp : report.components) out << " " << comp.type;
  out << "\n";
  return out.str();
}

std::string edge_list_of(const eirep::OrdinaryQuiver& q) {
  std::ostringstream out;
  out << "# ordinary quiver over " << q.field.describe() << "\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    out << "# vertex " << vertex_label(q, v) << " dim " << q.vertices[v].dim << "\n";
  for (const auto& a : q.arrows)
    for (std::size_t i = 0; i < a.multiplicity; ++i) out << vertex_label(q, a.src) << " " << vertex_label(q, a.tgt) << "\n";
  return out.str();
}

std::string text_of(const eirep::CatRep& r) {
  const auto& c = *r.category;
  std::ostringstream out;
  for (std::size_t x = 0; x < c.object_count(); ++x) out << (x ? " " : "") << c.object_name(x) << ":" << r.dims[x];
  out << "\nfield: " << r.field.describe() << "\n";
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const auto& mi = c.morphism(m);
    out << c.morphism(m).name << ": " << c.object_name(mi.src) << " -> " << c.object_name(mi.tgt);
    const auto& a = r.mats[m];
    if (a.rows == 0 || a.cols == 0) {
      out << " (" << a.rows << "x" << a.cols << ")\n";
      continue;
    }
    out << "\n";
    for (std::size_t i = 0; i < a.rows; ++i) {
      out << "  ";
      for (std::size_t j = 0; j < a.cols; ++j) out << (j ? " " : "") << a(i, j);
      out << "\n";
    }
  }
  return out.str();
}

std::string info_of(const eirep::FiniteCategory& c, const std::string& kind) {
  std::ostringstream out;
  out << "kind: " << kind << "\n";
  out << "objects: " << c.object_count() << ", morphisms: " << c.morphism_count() << "\n";
  const auto report = eirep::check_category(c);
  if (!report.category_ok || !report.ei) {
    out << "not an EI category:\n";
    for (const auto& p : report.problems) out << "  " << p << "\n";
    return out.str();
  }
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    auto g = eirep::automorphism_group(c, x);
    out << "  " << c.object_name(x) << ": |Aut| = " << g->order() << (g->is_abelian() ? ", abelian" : "") << "\n";
  }
  out << "hom sets:\n";
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = 0; y < c.object_count(); ++y) {
      if (x == y || c.hom(x, y).empty()) continue;
      auto hb = eirep::hom_biset(c, x, y);
      out << "  " << c.object_name(x) << " -> " << c.object_name(y) << ": " << hb.points.size()
          << (hb.points.size() == 1 ? " morphism, " : " morphisms, ") << hb.biset.orbit_count() << " orbit" << (hb.biset.orbit_count() == 1 ? "" : "s") << "\n";
    }
  out << "connected: " << (report.connected ? "yes" : "no") << ", skeletal: " << (report.skeletal ? "yes" : "no")
      << ", free: " << (eirep::is_free(c) ? "yes" : "no") << "\n";
  auto under = eirep::underlying_quiver_and_poset(c);
  out << "underlying quiver:";
  if (under.quiver.arrows.empty()) out << " no arrows";
  for (auto [s, t] : under.quiver.arrows) out << " " << under.quiver.vertices[s] << "->" << under.quiver.vertices[t];
  out << "\n";
  return out.str();
}

}  // namespace

extern "C" {

const char* eirep_version(void) { return "1.0.0"; }
const char* eirep_last_error(void) { return last_error.c_str(); }
size_t eirep_last_error_line(void) { return last_line; }
size_t eirep_last_error_column(void) { return last_column; }
void eirep_string_free(char* s) { std::free(s); }

eirep_status eirep_category_load(const char* path, eirep_category** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  eirep_status status = EIREP_OK;
  const auto text = read_or_io(path, status);
  if (status != EIREP_OK) return status;
  return eirep_category_parse(text.c_str(), out);
}

eirep_status eirep_category_parse(const char* json_text, eirep_category** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto doc = eirep::category_from_json(eirep::parse_json(json_text));
    *out = new eirep_category{std::move(doc)};
  });
}

void eirep_category_free(eirep_category* c) { delete c; }

size_t eirep_category_object_count(const eirep_category* c) { return c ? c->doc.category->object_count() : 0; }
size_t eirep_category_morphism_count(const eirep_category* c) { return c ? c->doc.category->morphism_count() : 0; }

const char* eirep_category_object_name(const eirep_category* c, size_t object) {
  if (!c || object >= c->doc.category->object_count()) return nullptr;
  return c->doc.category->object_name(object).c_str();
}

eirep_status eirep_category_validate(const eirep_category* c, int* ok, char** report_json) {
  if (!c) return null_argument("category");
  if (!ok) return null_argument("ok");
  return guarded([&] {
    const auto report = eirep::check_category(*c->doc.category);
    nlohmann::json problems = nlohmann::json::array(), notes = nlohmann::json::array();
    for (const auto& p : report.problems) {
      const bool note = p.rfind("connectivity:", 0) == 0 || p.rfind("skeletal:", 0) == 0;
      (note ? notes : problems).push_back(p);
    }
    *ok = problems.empty() ? 1 : 0;
    if (report_json)
      *report_json = dup(nlohmann::json{{"ok", problems.empty()}, {"problems", problems}, {"notes", notes}}.dump(2));
  });
}

eirep_status eirep_category_info(const eirep_category* c, char** text) {
  if (!c) return null_argument("category");
  if (!text) return null_argument("text");
  return guarded([&] { *text = dup(info_of(*c->doc.category, c->doc.kind)); });
}

eirep_status eirep_decide(const eirep_category* c, uint32_t p, int extended, uint64_t seed, eirep_verdict** out) {
  if (!c) return null_argument("category");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    eirep::DecideOptions options;
    options.extended = extended != 0;
    options.seed = seed;
    *out = new eirep_verdict{eirep::decide(*c->doc.category, p, options)};
  });
}

void eirep_verdict_free(eirep_verdict* v) { delete v; }

eirep_outcome eirep_verdict_outcome(const eirep_verdict* v) {
  if (!v) return EIREP_UNKNOWN;
  switch (v->verdict.outcome) {
    case eirep::Outcome::Finite:
      return EIREP_FINITE;
    case eirep::Outcome::Infinite:
      return EIREP_INFINITE;
    default:
      return EIREP_UNKNOWN;
  }
}

eirep_status eirep_verdict_json(const eirep_verdict* v, char** json_text) {
  if (!v) return null_argument("verdict");
  if (!json_text) return null_argument("json_text");
  return guarded([&] { *json_text = dup(eirep::to_json(v->verdict).dump(2) + "\n"); });
}

eirep_status eirep_verdict_text(const eirep_verdict* v, char** text) {
  if (!v) return null_argument("verdict");
  if (!text) return null_argument("text");
  return guarded([&] { *text = dup(text_of(v->verdict)); });
}

eirep_status eirep_verdict_parse(const char* json_text, eirep_verdict** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  *out = nullptr;
  const auto status = guarded([&] { *out = new eirep_verdict{eirep::verdict_from_json(eirep::parse_json(json_text))}; });
  if (status == EIREP_ERR_INPUT) return set_error(EIREP_ERR_PARSE, last_error);
  return status;
}

int eirep_verdict_equal(const eirep_verdict* a, const eirep_verdict* b) {
  return a && b && a->verdict == b->verdict ? 1 : 0;
}

eirep_status eirep_ordinary_quiver(const eirep_category* c, uint32_t ell, uint64_t seed, eirep_quiver** out) {
  if (!c) return null_argument("category");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto& cat = *c->doc.category;
    eirep::validate_ei(cat);
    const auto field = ell == 0 ? eirep::ordinary_quiver_field(cat) : eirep::Field::prime(ell);
    auto q = c->doc.quiver ? eirep::ordinary_quiver(*c->doc.quiver, field, seed)
                           : eirep::ordinary_quiver(cat, field, seed);
    *out = new eirep_quiver{std::move(q)};
  });
}

void eirep_quiver_free(eirep_quiver* q) { delete q; }
size_t eirep_quiver_vertex_count(const eirep_quiver* q) { return q ? q->quiver.vertices.size() : 0; }
size_t eirep_quiver_arrow_count(const eirep_quiver* q) { return q ? q->quiver.arrow_count() : 0; }

eirep_status eirep_quiver_text(const eirep_quiver* q, char** text) {
  if (!q) return null_argument("quiver");
  if (!text) return null_argument("text");
  return guarded([&] { *text = dup(text_of(q->quiver)); });
}

eirep_status eirep_quiver_edge_list(const eirep_quiver* q, char** text) {
  if (!q) return null_argument("quiver");
  if (!text) return null_argument("text");
  return guarded([&] { *text = dup(edge_list_of(q->quiver)); });
}

eirep_status eirep_subcategory_load(const eirep_category* c, const char* path, eirep_subcategory** out) {
  if (!c) return null_argument("category");
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  eirep_status status = EIREP_OK;
  const auto text = read_or_io(path, status);
  if (status != EIREP_OK) return status;
  return guarded([&] {
    auto emb = eirep::subcategory_from_json(eirep::parse_json(text), *c->doc.category);
    *out = new eirep_subcategory{c->doc.category, std::move(emb)};
  });
}

void eirep_subcategory_free(eirep_subcategory* d) { delete d; }

eirep_status eirep_rep_load(const eirep_subcategory* d, const char* path, eirep_rep** out) {
  if (!d) return null_argument("subcategory");
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  eirep_status status = EIREP_OK;
  const auto text = read_or_io(path, status);
  if (status != EIREP_OK) return status;
  return guarded([&] { *out = new eirep_rep{eirep::rep_from_json(eirep::parse_json(text), d->embedding.category)}; });
}

void eirep_rep_free(eirep_rep* r) { delete r; }

eirep_status eirep_induce(const eirep_rep* r, const eirep_subcategory* d, eirep_rep** out) {
  if (!r) return null_argument("rep");
  if (!d) return null_argument("subcategory");
  if (!out) return null_argument("out");
  *out = nullptr;
  if (r->rep.category != d->embedding.category)
    return set_error(EIREP_ERR_ARGUMENT, "representation is not over the subcategory");
  return guarded([&] { *out = new eirep_rep{eirep::induce_rep(r->rep, d->embedding, d->ambient)}; });
}

eirep_status eirep_restrict(const eirep_rep* r, const eirep_subcategory* d, eirep_rep** out) {
  if (!r) return null_argument("rep");
  if (!d) return null_argument("subcategory");
  if (!out) return null_argument("out");
  *out = nullptr;
  if (r->rep.category != d->ambient)
    return set_error(EIREP_ERR_ARGUMENT, "representation is not over the ambient category");
  return guarded([&] { *out = new eirep_rep{eirep::restrict_rep(r->rep, d->embedding)}; });
}

size_t eirep_rep_object_count(const eirep_rep* r) { return r ? r->rep.dims.size() : 0; }
size_t eirep_rep_dim(const eirep_rep* r, size_t object) {
  return r && object < r->rep.dims.size() ? r->rep.dims[object] : 0;
}

eirep_status eirep_rep_isomorphic(const eirep_rep* a, const eirep_rep* b, uint64_t seed, int* iso) {
  if (!a || !b) return null_argument("rep");
  if (!iso) return null_argument("iso");
  if (a->rep.category != b->rep.category)
    return set_error(EIREP_ERR_ARGUMENT, "representations are over different categories");
  return guarded([&] { *iso = eirep::catrep_is_isomorphic(a->rep, b->rep, seed) ? 1 : 0; });
}

eirep_status eirep_rep_text(const eirep_rep* r, char** text) {
  if (!r) return null_argument("rep");
  if (!text) return null_argument("text");
  return guarded([&] { *text = dup(text_of(r->rep)); });
}

eirep_status eirep_rep_json(const eirep_rep* r, char** json_text) {
  if (!r) return null_argument("rep");
  if (!json_text) return null_argument("json_text");
  return guarded([&] { *json_text = dup(eirep::to_json(r->rep).dump(2) + "\n"); });
}

}  // extern "C"
