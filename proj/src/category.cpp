#include "eirep/category.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dsu.hpp"
#include "eirep/error.hpp"

namespace eirep {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                               std::vector<std::size_t> identities, std::vector<std::int32_t> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  const auto n = objects_.size(), m = morphisms_.size();
  if (identities_.size() != n) throw InputError("one identity per object is required");
  if (table_.size() != m * m) throw InputError("composition table has wrong size");
  for (std::size_t x = 0; x < n; ++x) {
    if (objects_[x].empty()) objects_[x] = "o" + std::to_string(x);
    if (!object_by_name_.emplace(objects_[x], x).second)
      throw InputError("duplicate object name '" + objects_[x] + "'");
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto& mi = morphisms_[i];
    if (mi.src >= n || mi.tgt >= n) throw InputError("morphism endpoint out of range");
    if (mi.name.empty()) mi.name = "m" + std::to_string(i);
    if (!morphism_by_name_.emplace(mi.name, i).second)
      throw InputError("duplicate morphism name '" + mi.name + "'");
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto id = identities_[x];
    if (id >= m || morphisms_[id].src != x || morphisms_[id].tgt != x)
      throw InputError("identity of '" + objects_[x] + "' is not an endomorphism of it");
  }
  for (auto v : table_)
    if (v < kUndefined || v >= static_cast<std::int32_t>(m)) throw InputError("composite out of range");
  hom_.assign(n * n, {});
  hom_pos_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto& h = hom_[morphisms_[i].src * n + morphisms_[i].tgt];
    hom_pos_[i] = h.size();
    h.push_back(i);
  }
}

std::optional<std::size_t> FiniteCategory::object_index(const std::string& name) const {
  auto it = object_by_name_.find(name);
  if (it == object_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteCategory::morphism_index(const std::string& name) const {
  auto it = morphism_by_name_.find(name);
  if (it == morphism_by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteCategory::compose_checked(std::size_t g, std::size_t f) const {
  auto r = compose(g, f);
  if (r < 0)
    throw StructuralError("composite " + morphisms_[g].name + " o " + morphisms_[f].name + " is undefined");
  return static_cast<std::size_t>(r);
}

std::vector<StructureIssue> structure_issues(const FiniteCategory& c, std::size_t limit) {
  std::vector<StructureIssue> out;
  const auto m = c.morphism_count();
  auto name = [&](std::size_t i) { return c.morphism(i).name; };
  auto add = [&](std::string kind, std::string detail) {
    if (out.size() < limit) out.push_back({std::move(kind), std::move(detail)});
  };
  bool shape_ok = true;
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      const bool composable = c.morphism(f).tgt == c.morphism(g).src;
      const auto r = c.compose(g, f);
      if (composable && r < 0) {
        add("composition", "missing composite " + name(g) + " o " + name(f));
        shape_ok = false;
      } else if (!composable && r >= 0) {
        add("composition", "composite " + name(g) + " o " + name(f) + " given for non-composable pair");
        shape_ok = false;
      } else if (r >= 0 && (c.morphism(r).src != c.morphism(f).src || c.morphism(r).tgt != c.morphism(g).tgt)) {
        add("composition", "composite " + name(g) + " o " + name(f) + " = " + name(r) + " has wrong endpoints");
        shape_ok = false;
      }
    }
  if (!shape_ok) return out;
  for (std::size_t f = 0; f < m; ++f) {
    const auto& mf = c.morphism(f);
    if (c.compose(f, c.identity(mf.src)) != static_cast<std::int32_t>(f) ||
        c.compose(c.identity(mf.tgt), f) != static_cast<std::int32_t>(f))
      add("identity", "identity law fails for " + name(f));
  }
  for (std::size_t f = 0; f < m && out.size() < limit; ++f) {
    const auto y = c.morphism(f).tgt;
    for (std::size_t z = 0; z < c.object_count(); ++z)
      for (auto g : c.hom(y, z)) {
        const auto gf = static_cast<std::size_t>(c.compose(g, f));
        for (std::size_t w = 0; w < c.object_count(); ++w)
          for (auto h : c.hom(z, w)) {
            const auto lhs = c.compose(h, gf);
            const auto rhs = c.compose(static_cast<std::size_t>(c.compose(h, g)), f);
            if (lhs != rhs)
              add("associativity", "(" + name(h) + ", " + name(g) + ", " + name(f) + "): " + name(h) + " o (" +
                                       name(g) + " o " + name(f) + ") = " + name(lhs) + " but (" + name(h) + " o " +
                                       name(g) + ") o " + name(f) + " = " + name(rhs));
          }
      }
  }
  return out;
}

bool is_isomorphism(const FiniteCategory& c, std::size_t m) {
  const auto& mi = c.morphism(m);
  for (auto n : c.hom(mi.tgt, mi.src))
    if (c.compose(n, m) == static_cast<std::int32_t>(c.identity(mi.src)) &&
        c.compose(m, n) == static_cast<std::int32_t>(c.identity(mi.tgt)))
      return true;
  return false;
}

std::vector<std::vector<std::size_t>> connected_components(const FiniteCategory& c) {
  detail::Dsu dsu(c.object_count());
  for (std::size_t i = 0; i < c.morphism_count(); ++i) dsu.unite(c.morphism(i).src, c.morphism(i).tgt);
  std::size_t count = 0;
  auto ids = dsu.class_ids(&count);
  std::vector<std::vector<std::size_t>> comps(count);
  for (std::size_t x = 0; x < ids.size(); ++x) comps[ids[x]].push_back(x);
  return comps;
}

bool is_connected(const FiniteCategory& c) { return connected_components(c).size() == 1; }

bool is_skeletal(const FiniteCategory& c) {
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = 0; y < c.object_count(); ++y)
      if (x != y)
        for (auto f : c.hom(x, y))
          if (is_isomorphism(c, f)) return false;
  return true;
}

ValidationReport check_category(const FiniteCategory& c) {
  ValidationReport r;
  for (const auto& issue : structure_issues(c)) r.problems.push_back(issue.kind + ": " + issue.detail);
  r.category_ok = r.problems.empty();
  if (!r.category_ok) return r;
  r.ei = true;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (auto f : c.hom(x, x))
      if (!is_isomorphism(c, f)) {
        r.ei = false;
        r.problems.push_back("EI: endomorphism " + c.morphism(f).name + " is not invertible");
        break;
      }
  r.connected = c.object_count() > 0 && is_connected(c);
  if (!r.connected) r.problems.push_back("connectivity: category is not connected");
  r.skeletal = is_skeletal(c);
  if (!r.skeletal) r.problems.push_back("skeletal: distinct objects are isomorphic");
  return r;
}

ValidationReport validate_ei(const FiniteCategory& c) {
  auto r = check_category(c);
  if (!r.category_ok || !r.ei) throw StructuralError(r.problems.empty() ? "not an EI category" : r.problems.front());
  return r;
}

GroupPtr automorphism_group(const FiniteCategory& c, std::size_t x) {
  const auto& ends = c.hom(x, x);
  const auto n = ends.size();
  auto perm_of = [&](std::size_t a) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto r = c.compose(a, ends[i]);
      if (r < 0) throw StructuralError("endomorphisms of '" + c.object_name(x) + "' do not compose");
      im[i] = static_cast<std::uint32_t>(c.position_in_hom(static_cast<std::size_t>(r)));
    }
    try {
      return Perm(im);
    } catch (const InputError&) {
      throw StructuralError("endomorphism " + c.morphism(a).name + " is not invertible");
    }
  };
  std::vector<bool> reached(n, false);
  const auto id_pos = c.position_in_hom(c.identity(x));
  reached[id_pos] = true;
  std::vector<std::size_t> span{id_pos};
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (reached[i]) continue;
    gens.push_back(perm_of(ends[i]));
    for (std::size_t k = 0; k < span.size(); ++k)
      for (const auto& g : gens) {
        auto nxt = g(static_cast<std::uint32_t>(span[k]));
        if (!reached[nxt]) {
          reached[nxt] = true;
          span.push_back(nxt);
        }
      }
  }
  auto grp = FiniteGroup::generated_by(n, std::move(gens));
  if (grp->order() != n) throw StructuralError("endomorphisms of '" + c.object_name(x) + "' do not form a group");
  std::vector<std::int64_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(ends[grp->element(i)(static_cast<std::uint32_t>(id_pos))]);
  return grp->with_labels(std::move(labels));
}

std::size_t element_of_morphism(const FiniteGroup& aut, std::size_t morphism) {
  auto e = aut.index_of_label(static_cast<std::int64_t>(morphism));
  if (!e) throw InputError("morphism is not an element of this automorphism group");
  return *e;
}

HomBiset hom_biset(const FiniteCategory& c, std::size_t x, std::size_t y) {
  HomBiset hb;
  hb.x = x;
  hb.y = y;
  hb.g = automorphism_group(c, x);
  hb.h = automorphism_group(c, y);
  hb.points = c.hom(x, y);
  const auto n = hb.points.size();
  std::vector<Perm> left, right;
  for (const auto& gen : hb.h->generators()) {
    const auto h = static_cast<std::size_t>(hb.h->label(*hb.h->index_of(gen)));
    std::vector<std::uint32_t> im(n);
    for (std::size_t i = 0; i < n; ++i)
      im[i] = static_cast<std::uint32_t>(c.position_in_hom(c.compose_checked(h, hb.points[i])));
    left.emplace_back(im);
  }
  for (const auto& gen : hb.g->generators()) {
    const auto g = static_cast<std::size_t>(hb.g->label(*hb.g->index_of(gen)));
    std::vector<std::uint32_t> im(n);
    for (std::size_t i = 0; i < n; ++i)
      im[i] = static_cast<std::uint32_t>(c.position_in_hom(c.compose_checked(hb.points[i], g)));
    right.emplace_back(im);
  }
  hb.biset = Biset::from_generators(hb.h, hb.g, n, left, right);
  return hb;
}

namespace {

std::vector<bool> iso_flags(const FiniteCategory& c) {
  std::vector<bool> iso(c.morphism_count());
  for (std::size_t m = 0; m < c.morphism_count(); ++m) iso[m] = is_isomorphism(c, m);
  return iso;
}

/// factorizable[m] = m is a composite of two non-isomorphisms.
std::vector<bool> factorizable_flags(const FiniteCategory& c, const std::vector<bool>& iso) {
  std::vector<bool> fact(c.morphism_count(), false);
  const auto n = c.object_count();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (auto b : c.hom(x, y)) {
        if (iso[b]) continue;
        for (std::size_t z = 0; z < n; ++z)
          for (auto g : c.hom(y, z))
            if (!iso[g]) fact[c.compose_checked(g, b)] = true;
      }
  return fact;
}

}  // namespace

std::vector<std::size_t> unfactorizables(const FiniteCategory& c) {
  auto iso = iso_flags(c);
  auto fact = factorizable_flags(c, iso);
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (!iso[m] && !fact[m]) out.push_back(m);
  return out;
}

bool is_unfactorizable(const FiniteCategory& c, std::size_t m) {
  auto u = unfactorizables(c);
  return std::binary_search(u.begin(), u.end(), m);
}

std::vector<std::size_t> factorize(const FiniteCategory& c, std::size_t alpha) {
  auto iso = iso_flags(c);
  std::vector<std::size_t> out;
  std::size_t budget = 4 * c.morphism_count() + 16;
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (budget-- == 0) throw StructuralError("factorization does not terminate; category is not EI");
    if (iso[a]) return;
    const auto x = c.morphism(a).src, z = c.morphism(a).tgt;
    for (std::size_t y = 0; y < c.object_count(); ++y)
      for (auto b : c.hom(x, y)) {
        if (iso[b]) continue;
        for (auto g : c.hom(y, z))
          if (!iso[g] && c.compose(g, b) == static_cast<std::int32_t>(a)) {
            self(self, b);
            self(self, g);
            return;
          }
      }
    out.push_back(a);
  };
  rec(rec, alpha);
  return out;
}

UnderlyingStructure underlying_quiver_and_poset(const FiniteCategory& c) {
  const auto n = c.object_count();
  UnderlyingStructure u;
  u.quiver.vertices = c.object_names();
  u.poset.size = n;
  u.poset.leq.assign(n * n, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) u.poset.leq[x * n + y] = !c.hom(x, y).empty();
  auto unf = unfactorizables(c);
  std::vector<bool> is_unf(c.morphism_count(), false);
  for (auto m : unf) is_unf[m] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || c.hom(x, y).empty()) continue;
      auto hb = hom_biset(c, x, y);
      auto ids = hb.biset.orbit_ids();
      std::set<std::size_t> seen;
      for (std::size_t i = 0; i < hb.points.size(); ++i)
        if (is_unf[hb.points[i]] && seen.insert(ids[i]).second) {
          u.quiver.arrows.emplace_back(x, y);
          u.representatives.push_back(hb.points[i]);
        }
    }
  return u;
}

void check_ei_quiver(const EIQuiver& q) {
  const auto n = q.objects.size();
  if (q.groups.size() != n) throw InputError("EI quiver needs one group per object");
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : q.arrows) {
    if (a.src >= n || a.tgt >= n) throw InputError("arrow endpoint out of range");
    if (a.src == a.tgt) throw InputError("arrow '" + a.name + "' is a loop");
    if (!same_group(*a.biset.left_group(), *q.groups[a.tgt]) || !same_group(*a.biset.right_group(), *q.groups[a.src]))
      throw InputError("arrow '" + a.name + "' carries a biset over the wrong groups");
    out[a.src].push_back(a.tgt);
    ++indeg[a.tgt];
  }
  std::vector<std::size_t> queue;
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) queue.push_back(x);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto y : out[queue[k]])
      if (--indeg[y] == 0) queue.push_back(y);
  if (queue.size() != n) throw InputError("EI quiver has a directed cycle");
}

UnderlyingEIQuiver underlying_ei_quiver(const FiniteCategory& c) {
  UnderlyingEIQuiver out;
  const auto n = c.object_count();
  out.quiver.objects = c.object_names();
  for (std::size_t x = 0; x < n; ++x) out.quiver.groups.push_back(automorphism_group(c, x));
  auto unf = unfactorizables(c);
  std::vector<bool> is_unf(c.morphism_count(), false);
  for (auto m : unf) is_unf[m] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || c.hom(x, y).empty()) continue;
      auto fresh = hom_biset(c, x, y);
      auto ids = fresh.biset.orbit_ids();
      std::map<std::size_t, std::vector<std::uint32_t>> orbits;
      for (std::size_t i = 0; i < fresh.points.size(); ++i)
        if (is_unf[fresh.points[i]]) orbits[ids[i]].push_back(static_cast<std::uint32_t>(i));
      for (auto& [id, pts] : orbits) {
        EIArrow a;
        a.src = x;
        a.tgt = y;
        a.name = c.morphism(fresh.points[pts.front()]).name;
        a.biset = fresh.biset.restricted_to(pts);
        std::vector<std::size_t> carrier;
        for (auto p : pts) carrier.push_back(fresh.points[p]);
        out.quiver.arrows.push_back(std::move(a));
        out.carriers.push_back(std::move(carrier));
      }
    }
  return out;
}

}  // namespace eirep
