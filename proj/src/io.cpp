#include "eirep/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace eirep {

using json = nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, std::string path)
    : InputError(message), line_(line), column_(column), path_(std::move(path)) {}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what, 0, 0, path);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

void check_schema(const json& j, const char* schema) {
  const auto got = as_string(field(j, "", "schema"), "/schema");
  if (got != schema) fail("/schema", "expected \"" + std::string(schema) + "\", got \"" + got + "\"");
}

Perm as_perm(const json& j, const std::string& path, std::optional<std::size_t> degree) {
  as_array(j, path);
  std::vector<std::uint32_t> images;
  for (std::size_t i = 0; i < j.size(); ++i) images.push_back(static_cast<std::uint32_t>(as_uint(j[i], sub(path, i))));
  if (degree && images.size() != *degree)
    fail(path, "expected " + std::to_string(*degree) + " images, got " + std::to_string(images.size()));
  std::vector<bool> seen(images.size());
  for (auto v : images) {
    if (v >= images.size() || seen[v]) fail(path, "not a permutation of 0.." + std::to_string(images.size() - 1));
    seen[v] = true;
  }
  return Perm(std::move(images));
}

std::vector<Perm> as_perms(const json& j, const std::string& path, std::optional<std::size_t> degree) {
  as_array(j, path);
  std::vector<Perm> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_perm(j[i], sub(path, i), degree));
    if (!degree) degree = out.back().degree();
  }
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& names, const json& j, const std::string& path,
                   const char* what) {
  const auto name = as_string(j, path);
  auto it = names.find(name);
  if (it == names.end()) fail(path, std::string("unknown ") + what + " \"" + name + "\"");
  return it->second;
}

std::map<std::string, std::size_t> name_index(const json& list, const std::string& path, const char* key) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto p = sub(path, i);
    const auto name = key ? as_string(field(list[i], p, key), sub(p, key)) : as_string(list[i], p);
    if (name.empty()) fail(p, "empty name");
    if (!out.emplace(name, i).second) fail(p, "duplicate name \"" + name + "\"");
  }
  return out;
}

CategoryDocument explicit_from_json(const json& j) {
  const auto& objs = as_array(field(j, "", "objects"), "/objects");
  const auto& mors = as_array(field(j, "", "morphisms"), "/morphisms");
  auto obj_names = name_index(objs, "/objects", nullptr);
  auto mor_names = name_index(mors, "/morphisms", "id");
  ExplicitCategory e;
  for (const auto& o : objs) e.objects.push_back(o.get<std::string>());
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const auto p = sub("/morphisms", i);
    e.morphisms.push_back(MorphismInfo{mors[i]["id"].get<std::string>(),
                                       lookup(obj_names, field(mors[i], p, "src"), sub(p, "src"), "object"),
                                       lookup(obj_names, field(mors[i], p, "tgt"), sub(p, "tgt"), "object")});
  }
  const auto& ids = field(j, "", "identities");
  if (!ids.is_object()) fail("/identities", "expected an object mapping object names to morphism ids");
  e.identities.assign(e.objects.size(), 0);
  std::vector<bool> have(e.objects.size());
  for (const auto& [obj, id] : ids.items()) {
    const auto p = sub("/identities", obj);
    auto it = obj_names.find(obj);
    if (it == obj_names.end()) fail(p, "unknown object \"" + obj + "\"");
    const auto m = lookup(mor_names, id, p, "morphism");
    if (e.morphisms[m].src != it->second || e.morphisms[m].tgt != it->second)
      fail(p, "identity must be an endomorphism of \"" + obj + "\"");
    e.identities[it->second] = m;
    have[it->second] = true;
  }
  for (std::size_t x = 0; x < have.size(); ++x)
    if (!have[x]) fail("/identities", "no identity for \"" + e.objects[x] + "\"");
  if (j.contains("composition")) {
    const auto& comp = as_array(j["composition"], "/composition");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto p = sub("/composition", i);
      if (!comp[i].is_array() || comp[i].size() != 3) fail(p, "expected [f, g, g o f]");
      std::array<std::size_t, 3> t{};
      for (std::size_t k = 0; k < 3; ++k) t[k] = lookup(mor_names, comp[i][k], sub(p, k), "morphism");
      auto [it, fresh] = seen.emplace(std::make_pair(t[0], t[1]), t[2]);
      if (!fresh && it->second != t[2]) fail(p, "contradicts an earlier composite of the same pair");
      e.triples.push_back(t);
    }
  }
  CategoryDocument doc;
  doc.kind = "explicit";
  doc.category = build_category(e);
  return doc;
}

CategoryDocument ei_quiver_from_json(const json& j) {
  const auto& objs = as_array(field(j, "", "objects"), "/objects");
  auto obj_names = name_index(objs, "/objects", "name");
  EIQuiver q;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto p = sub("/objects", i);
    q.objects.push_back(objs[i]["name"].get<std::string>());
    std::optional<std::size_t> degree;
    if (objs[i].contains("degree")) degree = as_uint(objs[i]["degree"], sub(p, "degree"));
    auto gens = objs[i].contains("generators") ? as_perms(objs[i]["generators"], sub(p, "generators"), degree)
                                               : std::vector<Perm>{};
    if (!degree) degree = gens.empty() ? 1 : gens.front().degree();
    try {
      q.groups.push_back(FiniteGroup::generated_by(*degree, gens));
    } catch (const Error& e) {
      fail(p, e.what());
    }
  }
  const auto& arrows = j.contains("arrows") ? as_array(j["arrows"], "/arrows") : json::array();
  name_index(arrows, "/arrows", "name");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto p = sub("/arrows", i);
    const auto& a = arrows[i];
    EIArrow arrow;
    arrow.name = a["name"].get<std::string>();
    arrow.src = lookup(obj_names, field(a, p, "src"), sub(p, "src"), "object");
    arrow.tgt = lookup(obj_names, field(a, p, "tgt"), sub(p, "tgt"), "object");
    const auto points = as_uint(field(a, p, "points"), sub(p, "points"));
    if (points == 0) fail(sub(p, "points"), "a biset needs at least one point");
    const auto& h = q.groups[arrow.tgt];
    const auto& g = q.groups[arrow.src];
    auto left = as_perms(field(a, p, "left"), sub(p, "left"), points);
    auto right = as_perms(field(a, p, "right"), sub(p, "right"), points);
    if (left.size() != h->generators().size())
      fail(sub(p, "left"), "one permutation per generator of \"" + q.objects[arrow.tgt] + "\" is required");
    if (right.size() != g->generators().size())
      fail(sub(p, "right"), "one permutation per generator of \"" + q.objects[arrow.src] + "\" is required");
    try {
      arrow.biset = Biset::from_generators(h, g, points, left, right);
    } catch (const StructuralError& e) {
      throw StructuralError(p + ": " + e.what());
    } catch (const Error& e) {
      fail(p, e.what());
    }
    q.arrows.push_back(std::move(arrow));
  }
  try {
    check_ei_quiver(q);
  } catch (const Error& e) {
    throw StructuralError(std::string("/arrows: ") + e.what());
  }
  CategoryDocument doc;
  doc.kind = "ei_quiver";
  doc.category = free_ei_cover(q).category;
  doc.quiver = std::move(q);
  return doc;
}

Field field_from_json(const json& j, const std::string& path) {
  const auto p = as_uint(field(j, path, "characteristic"), sub(path, "characteristic"));
  const auto e = j.contains("degree") ? as_uint(j["degree"], sub(path, "degree")) : 1;
  try {
    if (j.contains("modulus")) {
      std::vector<std::uint32_t> modulus;
      for (std::size_t i = 0; i < as_array(j["modulus"], sub(path, "modulus")).size(); ++i)
        modulus.push_back(static_cast<std::uint32_t>(as_uint(j["modulus"][i], sub(sub(path, "modulus"), i))));
      return Field::with_modulus(static_cast<std::uint32_t>(p), modulus);
    }
    return e == 1 ? Field::prime(static_cast<std::uint32_t>(p))
                  : Field::extension(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  } catch (const Error& err) {
    fail(path, err.what());
  }
}

json field_to_json(const Field& f) {
  json j{{"characteristic", f.characteristic()}, {"degree", f.degree()}};
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

Matrix matrix_from_json(const json& j, const std::string& path, std::size_t rows, std::size_t cols, const Field& f) {
  as_array(j, path);
  Matrix m(rows, cols);
  if (rows == 0) {
    if (!j.empty()) fail(path, "expected an empty matrix");
    return m;
  }
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = as_array(j[r], sub(path, r));
    if (row.size() != cols) fail(sub(path, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = as_uint(row[c], sub(sub(path, r), c));
      if (v >= f.order()) fail(sub(sub(path, r), c), "entry outside the field");
      m(r, c) = static_cast<Fq>(v);
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
  return rows;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what, line, col);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw InputError("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot replace " + path);
  }
}

CategoryDocument category_from_json(const json& j) {
  check_schema(j, kCategorySchema);
  const auto kind = as_string(field(j, "", "kind"), "/kind");
  if (kind == "explicit") return explicit_from_json(j);
  if (kind == "ei_quiver") return ei_quiver_from_json(j);
  fail("/kind", "expected \"explicit\" or \"ei_quiver\", got \"" + kind + "\"");
}

CategoryDocument load_category(const std::string& path) { return category_from_json(parse_json(read_file(path))); }

json to_json(const FiniteCategory& c) {
  json objs = json::array(), mors = json::array(), ids = json::object(), comp = json::array();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    objs.push_back(c.object_name(x));
    ids[c.object_name(x)] = c.morphism(c.identity(x)).name;
  }
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    const auto& mi = c.morphism(m);
    mors.push_back(json{{"id", mi.name}, {"src", c.object_name(mi.src)}, {"tgt", c.object_name(mi.tgt)}});
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    for (std::size_t g = 0; g < c.morphism_count(); ++g) {
      if (c.is_identity(f) || c.is_identity(g)) continue;
      const auto gf = c.compose(g, f);
      if (gf >= 0)
        comp.push_back(json::array({c.morphism(f).name, c.morphism(g).name,
                                    c.morphism(static_cast<std::size_t>(gf)).name}));
    }
  return json{{"schema", kCategorySchema},
              {"kind", "explicit"},
              {"objects", objs},
              {"morphisms", mors},
              {"identities", ids},
              {"composition", comp}};
}

json to_json(const EIQuiver& q) {
  json objs = json::array(), arrows = json::array();
  for (std::size_t x = 0; x < q.objects.size(); ++x) {
    json gens = json::array();
    for (const auto& p : q.groups[x]->generators()) gens.push_back(p.images());
    objs.push_back(json{{"name", q.objects[x]}, {"degree", q.groups[x]->degree()}, {"generators", gens}});
  }
  for (const auto& a : q.arrows) {
    const auto& b = a.biset;
    auto action = [&](const GroupPtr& grp, bool left) {
      json out = json::array();
      for (const auto& gen : grp->generators()) {
        const auto e = *grp->index_of(gen);
        std::vector<std::uint32_t> images;
        for (std::uint32_t pt = 0; pt < b.size(); ++pt) images.push_back(left ? b.act_left(e, pt) : b.act_right(pt, e));
        out.push_back(images);
      }
      return out;
    };
    arrows.push_back(json{{"name", a.name},
                          {"src", q.objects[a.src]},
                          {"tgt", q.objects[a.tgt]},
                          {"points", b.size()},
                          {"left", action(b.left_group(), true)},
                          {"right", action(b.right_group(), false)}});
  }
  return json{{"schema", kCategorySchema}, {"kind", "ei_quiver"}, {"objects", objs}, {"arrows", arrows}};
}

Embedding subcategory_from_json(const json& j, const FiniteCategory& c) {
  check_schema(j, kSubcategorySchema);
  std::map<std::string, std::size_t> obj_names, mor_names;
  for (std::size_t x = 0; x < c.object_count(); ++x) obj_names[c.object_name(x)] = x;
  for (std::size_t m = 0; m < c.morphism_count(); ++m) mor_names[c.morphism(m).name] = m;
  const auto& objs = as_array(field(j, "", "objects"), "/objects");
  std::vector<std::size_t> objects;
  for (std::size_t i = 0; i < objs.size(); ++i) objects.push_back(lookup(obj_names, objs[i], sub("/objects", i), "object"));
  try {
    if (!j.contains("morphisms")) return full_subcategory(c, objects);
    const auto& mors = as_array(j["morphisms"], "/morphisms");
    std::vector<std::size_t> morphisms;
    for (std::size_t i = 0; i < mors.size(); ++i)
      morphisms.push_back(lookup(mor_names, mors[i], sub("/morphisms", i), "morphism"));
    return subcategory(c, objects, morphisms);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail("", e.what());
  }
}

CatRep rep_from_json(const json& j, CategoryPtr c) {
  check_schema(j, kRepSchema);
  const auto f = field_from_json(field(j, "", "field"), "/field");
  std::vector<std::size_t> dims(c->object_count(), 0);
  const auto& dj = field(j, "", "dims");
  if (!dj.is_object()) fail("/dims", "expected an object mapping object names to dimensions");
  for (const auto& [name, d] : dj.items()) {
    auto x = c->object_index(name);
    if (!x) fail(sub("/dims", name), "unknown object \"" + name + "\"");
    dims[*x] = as_uint(d, sub("/dims", name));
  }
  std::map<std::size_t, Matrix> given;
  if (j.contains("maps")) {
    const auto& mj = j["maps"];
    if (!mj.is_object()) fail("/maps", "expected an object mapping morphism names to matrices");
    for (const auto& [name, m] : mj.items()) {
      auto id = c->morphism_index(name);
      if (!id) fail(sub("/maps", name), "unknown morphism \"" + name + "\"");
      const auto& mi = c->morphism(*id);
      given[*id] = matrix_from_json(m, sub("/maps", name), dims[mi.tgt], dims[mi.src], f);
    }
  }
  try {
    return rep_from_generators(c, f, dims, given);
  } catch (const Error& e) {
    fail("/maps", e.what());
  }
}

json to_json(const CatRep& r) {
  const auto& c = *r.category;
  json dims = json::object(), maps = json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) dims[c.object_name(x)] = r.dims[x];
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) maps[c.morphism(m).name] = matrix_to_json(r.mats[m]);
  return json{{"schema", kRepSchema}, {"field", field_to_json(r.field)}, {"dims", dims}, {"maps", maps}};
}

}  // namespace eirep
