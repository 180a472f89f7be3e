#include <algorithm>
#include <map>
#include <set>

#include "dsu.hpp"
#include "eirep/category.hpp"
#include "eirep/error.hpp"

namespace eirep {

namespace {

constexpr std::size_t kMaxTuples = 1u << 21;
constexpr std::size_t kMaxMorphisms = 1u << 13;

struct PathData {
  std::vector<std::size_t> arrows;
  std::size_t src = 0, tgt = 0;
  std::vector<std::size_t> radix;       // carrier sizes
  std::vector<std::size_t> class_of;    // tuple index -> class
  std::vector<std::size_t> class_rep;   // class -> least tuple index
  std::size_t first_morphism = 0;       // id of class 0 in the cover
};

std::size_t encode(const std::vector<std::size_t>& radix, const std::vector<std::uint32_t>& t) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + t[i];
  return idx;
}

std::vector<std::uint32_t> decode(const std::vector<std::size_t>& radix, std::size_t idx) {
  std::vector<std::uint32_t> t(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    t[i] = static_cast<std::uint32_t>(idx % radix[i]);
    idx /= radix[i];
  }
  return t;
}

}  // namespace

FreeCover free_ei_cover(const EIQuiver& q) {
  check_ei_quiver(q);
  const auto n = q.objects.size();
  // Element translation between the object groups and each biset's own groups.
  std::vector<std::vector<std::size_t>> left_map(q.arrows.size()), right_map(q.arrows.size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    const auto& gt = *q.groups[arr.tgt];
    const auto& gs = *q.groups[arr.src];
    for (std::size_t e = 0; e < gt.order(); ++e) left_map[a].push_back(*arr.biset.left_group()->index_of(gt.element(e)));
    for (std::size_t e = 0; e < gs.order(); ++e) right_map[a].push_back(*arr.biset.right_group()->index_of(gs.element(e)));
  }

  std::vector<std::vector<std::size_t>> out_arrows(n);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) out_arrows[q.arrows[a].src].push_back(a);

  std::vector<PathData> paths;
  std::map<std::vector<std::size_t>, std::size_t> path_index;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> cur;
    auto dfs = [&](auto&& self, std::size_t at) -> void {
      for (auto a : out_arrows[at]) {
        cur.push_back(a);
        PathData p;
        p.arrows = cur;
        p.src = x;
        p.tgt = q.arrows[a].tgt;
        path_index[cur] = paths.size();
        paths.push_back(std::move(p));
        if (paths.size() > kMaxMorphisms) throw ResourceError("free cover has too many paths");
        self(self, q.arrows[a].tgt);
        cur.pop_back();
      }
    };
    dfs(dfs, x);
  }

  std::size_t morphism_total = 0;
  for (std::size_t x = 0; x < n; ++x) morphism_total += q.groups[x]->order();
  for (auto& p : paths) {
    std::size_t total = 1;
    for (auto a : p.arrows) {
      p.radix.push_back(q.arrows[a].biset.size());
      total *= q.arrows[a].biset.size();
      if (total > kMaxTuples) throw ResourceError("free cover: path carrier too large");
    }
    detail::Dsu dsu(total);
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
      const auto a_in = p.arrows[i], a_out = p.arrows[i + 1];
      const auto& mid = *q.groups[q.arrows[a_in].tgt];
      const auto& b_in = q.arrows[a_in].biset;
      const auto& b_out = q.arrows[a_out].biset;
      for (const auto& gen : mid.generators()) {
        const auto e = *mid.index_of(gen);
        const auto hl = left_map[a_in][e], hr = right_map[a_out][e];
        for (std::size_t idx = 0; idx < total; ++idx) {
          auto t1 = decode(p.radix, idx);
          auto t2 = t1;
          t1[i + 1] = b_out.act_right(t1[i + 1], hr);
          t2[i] = b_in.act_left(hl, t2[i]);
          dsu.unite(encode(p.radix, t1), encode(p.radix, t2));
        }
      }
    }
    std::size_t classes = 0;
    p.class_of = dsu.class_ids(&classes);
    p.class_rep.assign(classes, 0);
    for (std::size_t idx = total; idx-- > 0;) p.class_rep[p.class_of[idx]] = idx;
    morphism_total += classes;
    if (morphism_total > kMaxMorphisms) throw ResourceError("free cover has too many morphisms");
  }

  FreeCover cover;
  std::vector<MorphismInfo> morphisms;
  std::vector<std::size_t> identities(n);
  std::vector<std::size_t> aut_offset(n);
  for (std::size_t x = 0; x < n; ++x) {
    aut_offset[x] = morphisms.size();
    identities[x] = morphisms.size();
    const auto& g = *q.groups[x];
    for (std::size_t e = 0; e < g.order(); ++e) {
      MorphismInfo mi;
      mi.src = mi.tgt = x;
      mi.name = e == 0 ? "1_" + q.objects[x] : q.objects[x] + ".g" + std::to_string(e);
      morphisms.push_back(mi);
      CoverMorphism cm;
      cm.object = x;
      cm.element = e;
      cover.provenance.push_back(cm);
    }
  }
  for (auto& p : paths) {
    p.first_morphism = morphisms.size();
    std::string base;
    for (auto a : p.arrows) {
      const auto& nm = q.arrows[a].name;
      base += (base.empty() ? "" : ".") + (nm.empty() ? "a" + std::to_string(a) : nm);
    }
    for (std::size_t k = 0; k < p.class_rep.size(); ++k) {
      MorphismInfo mi;
      mi.src = p.src;
      mi.tgt = p.tgt;
      mi.name = p.class_rep.size() == 1 ? base : base + "#" + std::to_string(k);
      morphisms.push_back(mi);
      CoverMorphism cm;
      cm.is_automorphism = false;
      cm.path = p.arrows;
      cm.points = decode(p.radix, p.class_rep[k]);
      cover.provenance.push_back(cm);
    }
  }

  const auto m = morphisms.size();
  std::vector<std::int32_t> table(m * m, FiniteCategory::kUndefined);
  std::vector<std::size_t> path_of(m, static_cast<std::size_t>(-1));
  for (std::size_t pi = 0; pi < paths.size(); ++pi)
    for (std::size_t k = 0; k < paths[pi].class_rep.size(); ++k) path_of[paths[pi].first_morphism + k] = pi;
  auto class_morphism = [&](std::size_t pi, const std::vector<std::uint32_t>& t) {
    const auto& p = paths[pi];
    return static_cast<std::int32_t>(p.first_morphism + p.class_of[encode(p.radix, t)]);
  };
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms[f].tgt != morphisms[g].src) continue;
      const auto& cf = cover.provenance[f];
      const auto& cg = cover.provenance[g];
      std::int32_t r;
      if (cf.is_automorphism && cg.is_automorphism) {
        r = static_cast<std::int32_t>(aut_offset[cf.object] + q.groups[cf.object]->mul(cg.element, cf.element));
      } else if (!cf.is_automorphism && cg.is_automorphism) {
        auto t = cf.points;
        const auto last = cf.path.back();
        t.back() = q.arrows[last].biset.act_left(left_map[last][cg.element], t.back());
        r = class_morphism(path_of[f], t);
      } else if (cf.is_automorphism && !cg.is_automorphism) {
        auto t = cg.points;
        const auto first = cg.path.front();
        t.front() = q.arrows[first].biset.act_right(t.front(), right_map[first][cf.element]);
        r = class_morphism(path_of[g], t);
      } else {
        auto joined = cf.path;
        joined.insert(joined.end(), cg.path.begin(), cg.path.end());
        auto t = cf.points;
        t.insert(t.end(), cg.points.begin(), cg.points.end());
        r = class_morphism(path_index.at(joined), t);
      }
      table[g * m + f] = r;
    }
  cover.category = std::make_shared<FiniteCategory>(q.objects, std::move(morphisms), std::move(identities),
                                                    std::move(table));
  return cover;
}

CoverFunctor cover_functor(const FiniteCategory& c) {
  validate_ei(c);
  auto uq = underlying_ei_quiver(c);
  CoverFunctor out;
  out.cover = free_ei_cover(uq.quiver);
  for (const auto& cm : out.cover.provenance) {
    if (cm.is_automorphism) {
      out.image.push_back(static_cast<std::size_t>(uq.quiver.groups[cm.object]->label(cm.element)));
      continue;
    }
    std::size_t acc = uq.carriers[cm.path[0]][cm.points[0]];
    for (std::size_t i = 1; i < cm.path.size(); ++i) acc = c.compose_checked(uq.carriers[cm.path[i]][cm.points[i]], acc);
    out.image.push_back(acc);
  }
  return out;
}

bool is_free(const FiniteCategory& c) {
  auto f = cover_functor(c);
  if (f.image.size() != c.morphism_count()) return false;
  std::vector<bool> hit(c.morphism_count(), false);
  for (auto m : f.image) {
    if (hit[m]) return false;
    hit[m] = true;
  }
  return true;
}

namespace {

Embedding embed(const FiniteCategory& c, std::vector<std::size_t> objects, std::vector<std::size_t> morphisms) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  std::vector<std::int64_t> obj_pos(c.object_count(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] >= c.object_count()) throw InputError("object out of range");
    obj_pos[objects[i]] = static_cast<std::int64_t>(i);
  }
  for (auto x : objects) morphisms.push_back(c.identity(x));
  std::sort(morphisms.begin(), morphisms.end());
  morphisms.erase(std::unique(morphisms.begin(), morphisms.end()), morphisms.end());
  std::vector<std::int64_t> mor_pos(c.morphism_count(), -1);
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const auto m = morphisms[i];
    if (m >= c.morphism_count()) throw InputError("morphism out of range");
    if (obj_pos[c.morphism(m).src] < 0 || obj_pos[c.morphism(m).tgt] < 0)
      throw InputError("morphism " + c.morphism(m).name + " has an endpoint outside the subcategory");
    mor_pos[m] = static_cast<std::int64_t>(i);
  }
  Embedding e;
  e.object_to_parent = objects;
  e.to_parent = morphisms;
  std::vector<std::string> names;
  for (auto x : objects) names.push_back(c.object_name(x));
  std::vector<MorphismInfo> infos;
  for (auto m : morphisms) {
    auto mi = c.morphism(m);
    mi.src = static_cast<std::size_t>(obj_pos[mi.src]);
    mi.tgt = static_cast<std::size_t>(obj_pos[mi.tgt]);
    infos.push_back(mi);
  }
  std::vector<std::size_t> ids;
  for (auto x : objects) ids.push_back(static_cast<std::size_t>(mor_pos[c.identity(x)]));
  const auto k = morphisms.size();
  std::vector<std::int32_t> table(k * k, FiniteCategory::kUndefined);
  for (std::size_t gi = 0; gi < k; ++gi)
    for (std::size_t fi = 0; fi < k; ++fi) {
      auto r = c.compose(morphisms[gi], morphisms[fi]);
      if (r < 0) continue;
      if (mor_pos[r] < 0)
        throw InputError("subcategory is not closed: " + c.morphism(morphisms[gi]).name + " o " +
                         c.morphism(morphisms[fi]).name + " is missing");
      table[gi * k + fi] = static_cast<std::int32_t>(mor_pos[r]);
    }
  e.category = std::make_shared<FiniteCategory>(std::move(names), std::move(infos), std::move(ids), std::move(table));
  return e;
}

}  // namespace

Embedding full_subcategory(const FiniteCategory& c, const std::vector<std::size_t>& objects) {
  std::vector<bool> in(c.object_count(), false);
  for (auto x : objects) {
    if (x >= c.object_count()) throw InputError("object out of range");
    in[x] = true;
  }
  std::vector<std::size_t> morphisms;
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (in[c.morphism(m).src] && in[c.morphism(m).tgt]) morphisms.push_back(m);
  return embed(c, objects, morphisms);
}

Embedding subcategory(const FiniteCategory& c, const std::vector<std::size_t>& objects,
                      const std::vector<std::size_t>& morphisms) {
  return embed(c, objects, morphisms);
}

CategoryPtr opposite(const FiniteCategory& c) {
  const auto m = c.morphism_count();
  std::vector<MorphismInfo> infos;
  for (std::size_t i = 0; i < m; ++i) {
    auto mi = c.morphism(i);
    std::swap(mi.src, mi.tgt);
    infos.push_back(mi);
  }
  std::vector<std::size_t> ids;
  for (std::size_t x = 0; x < c.object_count(); ++x) ids.push_back(c.identity(x));
  std::vector<std::int32_t> table(m * m);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) table[g * m + f] = c.compose(f, g);
  return std::make_shared<FiniteCategory>(c.object_names(), std::move(infos), std::move(ids), std::move(table));
}

Embedding skeleton(const FiniteCategory& c) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    bool dup = false;
    for (auto y : keep)
      for (auto f : c.hom(y, x))
        if (is_isomorphism(c, f)) dup = true;
    if (!dup) keep.push_back(x);
  }
  return full_subcategory(c, keep);
}

CategoryPtr quotient_orbit_collapse(const FiniteCategory& c) {
  validate_ei(c);
  const auto n = c.object_count();
  std::vector<std::size_t> image(c.morphism_count());
  std::vector<MorphismInfo> infos;
  std::vector<std::size_t> ids(n);
  for (std::size_t x = 0; x < n; ++x) {
    ids[x] = infos.size();
    infos.push_back({"1_" + c.object_name(x), x, x});
    for (auto a : c.hom(x, x)) image[a] = ids[x];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || c.hom(x, y).empty()) continue;
      auto hb = hom_biset(c, x, y);
      auto orbit = hb.biset.orbit_ids();
      const auto base = infos.size();
      for (std::size_t i = 0; i < hb.points.size(); ++i) {
        if (orbit[i] + base == infos.size()) infos.push_back({"[" + c.morphism(hb.points[i]).name + "]", x, y});
        image[hb.points[i]] = base + orbit[i];
      }
    }
  const auto k = infos.size();
  std::vector<std::int32_t> table(k * k, FiniteCategory::kUndefined);
  for (std::size_t g = 0; g < c.morphism_count(); ++g)
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      auto r = c.compose(g, f);
      if (r < 0) continue;
      auto& slot = table[image[g] * k + image[f]];
      const auto val = static_cast<std::int32_t>(image[r]);
      if (slot != FiniteCategory::kUndefined && slot != val)
        throw StructuralError("orbit quotient: composite of " + infos[image[g]].name + " and " +
                              infos[image[f]].name + " is not well defined");
      slot = val;
    }
  return std::make_shared<FiniteCategory>(c.object_names(), std::move(infos), std::move(ids), std::move(table));
}

CategoryPtr poset_collapse(const FiniteCategory& c) {
  const auto n = c.object_count();
  std::vector<MorphismInfo> infos;
  std::vector<std::size_t> ids(n);
  std::vector<std::int64_t> at(n * n, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!c.hom(x, y).empty()) {
        at[x * n + y] = static_cast<std::int64_t>(infos.size());
        if (x == y) ids[x] = infos.size();
        infos.push_back({x == y ? "1_" + c.object_name(x) : c.object_name(x) + "<=" + c.object_name(y), x, y});
      }
  const auto k = infos.size();
  std::vector<std::int32_t> table(k * k, FiniteCategory::kUndefined);
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t f = 0; f < k; ++f)
      if (infos[f].tgt == infos[g].src) {
        auto r = at[infos[f].src * n + infos[g].tgt];
        if (r < 0) throw StructuralError("reachability is not transitive");
        table[g * k + f] = static_cast<std::int32_t>(r);
      }
  return std::make_shared<FiniteCategory>(c.object_names(), std::move(infos), std::move(ids), std::move(table));
}

CategoryPtr two_object_category(const GroupPtr& g, const GroupPtr& h, const Biset& b, const std::string& x,
                                const std::string& y) {
  EIQuiver q;
  q.objects = {x, y};
  q.groups = {g, h};
  EIArrow a;
  a.name = "a";
  a.src = 0;
  a.tgt = 1;
  a.biset = b;
  q.arrows.push_back(std::move(a));
  return free_ei_cover(q).category;
}

}  // namespace eirep

namespace eirep {

CategoryPtr build_category(const ExplicitCategory& def) {
  const auto m = def.morphisms.size();
  std::vector<std::int32_t> table(m * m, FiniteCategory::kUndefined);
  auto set = [&](std::size_t f, std::size_t g, std::size_t gf) {
    auto& slot = table[g * m + f];
    if (slot != FiniteCategory::kUndefined && slot != static_cast<std::int32_t>(gf))
      throw InputError("contradictory composites for " + def.morphisms[g].name + " o " + def.morphisms[f].name);
    slot = static_cast<std::int32_t>(gf);
  };
  for (const auto& t : def.triples) {
    if (t[0] >= m || t[1] >= m || t[2] >= m) throw InputError("composition triple refers to an unknown morphism");
    set(t[0], t[1], t[2]);
  }
  if (def.identities.size() != def.objects.size()) throw InputError("one identity per object is required");
  for (std::size_t f = 0; f < m; ++f) {
    const auto& mi = def.morphisms[f];
    if (mi.src >= def.objects.size() || mi.tgt >= def.objects.size()) throw InputError("morphism endpoint out of range");
    const auto ids = def.identities[mi.src], idt = def.identities[mi.tgt];
    if (table[f * m + ids] == FiniteCategory::kUndefined) table[f * m + ids] = static_cast<std::int32_t>(f);
    if (table[idt * m + f] == FiniteCategory::kUndefined) table[idt * m + f] = static_cast<std::int32_t>(f);
  }
  return std::make_shared<FiniteCategory>(def.objects, def.morphisms, def.identities, std::move(table));
}

}  // namespace eirep
