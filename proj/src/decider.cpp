#include "eirep/decider.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dsu.hpp"
#include "eirep/error.hpp"
#include "eirep/modrep.hpp"
#include "eirep/ordinary_quiver.hpp"

namespace eirep {

using nlohmann::json;

namespace {

// Rule references. These strings are part of the verdict format and are kept verbatim.
const std::map<std::string, std::string>& citation_table() {
  static const std::map<std::string, std::string> table{
      {"NORM", "Prop 2.2: skeleton and component split preserve the representation type (Morita equivalent)"},
      {"COMP", "Prop 2.2: a category is of finite type iff each connected component is"},
      {"SUB", "Prop 3.4: every full subcategory of a finite type category is of finite type"},
      {"N1", "Thm 1.1(1): Both G and H have cyclic Sylow p-subgroups"},
      {"N2", "Prop 3.7(3): C(x,y) has at most one orbit as a biset"},
      {"N3", "Prop 3.7(4): C(x,z) = C(y,z) o C(x,y)"},
      {"N4", "Prop 8.1: then Q is a Dynkin quiver"},
      {"N5", "Prop 6.9: If neither G nor H acts transitively; Thm 1.4(3)"},
      {"N6", "Prop 6.10: have p-subgroups acting nontrivially"},
      {"N7", "Thm 1.1(3), Prop 6.12: P meets G_0 in 1 or P"},
      {"N8", "Prop 6.15: normal Sylow p-subgroup P acting nontrivially"},
      {"N9", "Prop 7.7: has at most three double cosets"},
      {"N10", "Prop 8.5: acts transitively on at least one biset; Prop 8.3: |H1\\H/H2| = 1"},
      {"N11", "Prop 7.4(1),(2): Top(S induced to H) has no repeated summands and at most 3 summands"},
      {"S0", "Section 3: a group algebra is of finite type iff its Sylow p-subgroups are cyclic"},
      {"S1", "Lemma 7.1: C(x,y) has only one morphism"},
      {"S2", "Cor 4.4: disjoint union of Dynkin quivers"},
      {"S3", "Prop 5.1: either G or H acts transitively on C(x,y), subcases (a)-(e)"},
      {"S4", "Prop 5.3: it lies in the first family (C or C^op)"},
      {"S5", "Thm 7.2: all p-subgroups of G and H act trivially"},
      {"S6", "Thm 7.11: n = 1 for s, t >= 5; n <= 2 for s = 1 or t = 1; n <= 3 for s = t = 1"},
      {"S7", "Remark 5.4: the proof works for finite EI categories with arbitrarily many objects"},
      {"OPEN", "Section 1: the classification for two objects is still unknown in general"},
  };
  return table;
}

// Where a rule would need strengthening when the verdict stays Unknown.
const std::map<std::string, std::string>& open_hints() {
  static const std::map<std::string, std::string> table{
      {"gated", "rules of Sections 6-8 assume p != 2, 3"},
      {"two-object", "two objects with groups that are neither p-groups, abelian, nor both transitive (Section 7)"},
      {"p-groups", "p-group categories with more than three objects beyond the same-direction chain (Section 5)"},
      {"branched", "three-object p-group categories outside the two linear families (Section 5)"},
      {"free", "free categories with non-invertible automorphism orders (Section 8)"},
      {"general", "non-free categories with more than two objects (Section 8)"},
  };
  return table;
}

CriterionResult entry(const std::string& rule, RuleStatus status, json witness = json::object()) {
  return CriterionResult{rule, citation(rule), status, std::move(witness), {}};
}

CriterionResult not_applicable(const std::string& rule, const std::string& reason) {
  return entry(rule, RuleStatus::NotApplicable, json{{"reason", reason}});
}

bool gated(std::uint32_t p) { return p == 2 || p == 3; }

std::string morphism_name(const FiniteCategory& c, std::size_t m) { return c.morphism(m).name; }

// Morphism names of group elements; the groups are automorphism groups labelled by morphism id.
json element_names(const FiniteCategory& c, const FiniteGroup& g, const std::vector<std::size_t>& elems) {
  json out = json::array();
  for (auto e : elems) out.push_back(morphism_name(c, static_cast<std::size_t>(g.label(e))));
  return out;
}

json subgroup_names(const FiniteCategory& c, const Subgroup& s) { return element_names(c, *s.parent(), s.elements()); }

json pair_json(const FiniteCategory& c, const PairContext& pc) {
  return json{{"x", c.object_name(pc.x)}, {"y", c.object_name(pc.y)}};
}

std::size_t side_orbit_count(const Biset& b, bool left) {
  detail::Dsu dsu(b.size());
  const auto order = left ? b.left_group()->order() : b.right_group()->order();
  for (std::size_t e = 0; e < order; ++e)
    for (std::uint32_t pt = 0; pt < b.size(); ++pt) dsu.unite(pt, left ? b.act_left(e, pt) : b.act_right(pt, e));
  std::size_t count = 0;
  dsu.class_ids(&count);
  return count;
}

std::size_t log_p(std::size_t n, std::uint32_t p) {
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

std::string object_list(const FiniteCategory& c, const std::vector<std::size_t>& objs) {
  std::string s = "{";
  for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? ", " : "") + c.object_name(objs[i]);
  return s + "}";
}

bool is_cyclic(const FiniteGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_order(i) == g.order()) return true;
  return false;
}

// Subgroup of the automorphism group of an object, moved there by morphism labels.
Subgroup on_object_group(const GroupPtr& target, const Subgroup& s) {
  std::vector<std::size_t> elems;
  for (auto e : s.elements()) elems.push_back(*target->index_of_label(s.parent()->label(e)));
  std::sort(elems.begin(), elems.end());
  return Subgroup(target, std::move(elems));
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Finite:
      return "finite";
    case Outcome::Infinite:
      return "infinite";
    case Outcome::Unknown:
      break;
  }
  return "unknown";
}

std::string to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::Pass:
      return "pass";
    case RuleStatus::Fail:
      return "fail";
    case RuleStatus::NotApplicable:
      return "not-applicable";
    case RuleStatus::Unknown:
      break;
  }
  return "unknown";
}

std::optional<Outcome> outcome_from_string(const std::string& s) {
  for (auto o : {Outcome::Finite, Outcome::Infinite, Outcome::Unknown})
    if (to_string(o) == s) return o;
  return std::nullopt;
}

std::optional<RuleStatus> status_from_string(const std::string& s) {
  for (auto r : {RuleStatus::Pass, RuleStatus::Fail, RuleStatus::NotApplicable, RuleStatus::Unknown})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

const std::string& citation(const std::string& rule) {
  const auto& t = citation_table();
  auto it = t.find(rule);
  if (it == t.end()) throw InputError("unknown rule id " + rule);
  return it->second;
}

const CriterionResult* Verdict::deciding() const {
  if (outcome == Outcome::Infinite) {
    for (const auto& r : trace)
      if (r.status == RuleStatus::Fail) return &r;
  } else if (outcome == Outcome::Finite && !trace.empty()) {
    return &trace.back();
  }
  return nullptr;
}

const PairContext* CriterionContext::pair(std::size_t x, std::size_t y) const {
  for (const auto& pc : pairs)
    if (pc.x == x && pc.y == y) return &pc;
  return nullptr;
}

CriterionContext make_context(CategoryPtr c, std::uint32_t p, const DecideOptions& options) {
  CriterionContext ctx;
  ctx.category = c;
  ctx.p = p;
  ctx.options = options;
  const auto n = c->object_count();
  ctx.p_groups = p > 1;
  for (std::size_t x = 0; x < n; ++x) {
    ctx.groups.push_back(automorphism_group(*c, x));
    if (p > 1 && !is_p_group(*ctx.groups.back(), p)) ctx.p_groups = false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || c->hom(x, y).empty()) continue;
      PairContext pc;
      pc.x = x;
      pc.y = y;
      pc.hom = hom_biset(*c, x, y);
      const auto& b = pc.hom.biset;
      pc.chain = stabilizer_chain(b, pc.alpha);
      pc.orbits = b.orbit_count();
      pc.g_transitive = b.right_transitive();
      pc.h_transitive = b.left_transitive();
      pc.opg = o_p_prime(pc.hom.g, p);
      pc.oph = o_p_prime(pc.hom.h, p);
      pc.s = pc.opg.order();
      pc.t = pc.oph.order();
      pc.n_h = pc.chain.h1.index();
      pc.n_g = pc.chain.g1.index();
      pc.d_h = double_coset_count(pc.chain.h1, pc.chain.h1);
      pc.d_g = double_coset_count(pc.chain.g1, pc.chain.g1);
      ctx.pairs.push_back(std::move(pc));
    }
  ctx.free = is_free(*c);
  ctx.ei = underlying_ei_quiver(*c);
  return ctx;
}

namespace rules {

CriterionResult n1_cyclic_sylow(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  if (ctx.p == 0) return entry("N1", RuleStatus::Pass, json{{"note", "Sylow 0-subgroups are trivial"}});
  for (std::size_t x = 0; x < ctx.groups.size(); ++x) {
    const auto& g = *ctx.groups[x];
    if (!sylow_p_cyclic(g, ctx.p))
      return entry("N1", RuleStatus::Fail,
                   json{{"object", c.object_name(x)},
                        {"group_order", g.order()},
                        {"sylow_order", p_part(g.order(), ctx.p)},
                        {"max_p_element_order", [&] {
                           std::size_t m = 1;
                           for (auto e : p_elements(g, ctx.p)) m = std::max(m, g.element_order(e));
                           return m;
                         }()}});
  }
  return entry("N1", RuleStatus::Pass, json{{"objects", ctx.groups.size()}});
}

CriterionResult n2_single_orbit(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  for (const auto& pc : ctx.pairs) {
    if (pc.orbits <= 1) continue;
    auto reps = pc.hom.biset.orbit_representatives();
    auto w = pair_json(c, pc);
    w["orbits"] = pc.orbits;
    w["representatives"] = json::array({morphism_name(c, pc.hom.points[reps[0]]), morphism_name(c, pc.hom.points[reps[1]])});
    return entry("N2", RuleStatus::Fail, w);
  }
  return entry("N2", RuleStatus::Pass, json{{"pairs", ctx.pairs.size()}});
}

CriterionResult n3_composites(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  const auto n = c.object_count();
  if (n < 3) return not_applicable("N3", "fewer than three objects");
  std::size_t checked = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z || c.hom(x, y).empty() || c.hom(y, z).empty()) continue;
        ++checked;
        std::set<std::size_t> composites;
        for (auto a : c.hom(x, y))
          for (auto b : c.hom(y, z)) composites.insert(c.compose_checked(b, a));
        for (auto m : c.hom(x, z))
          if (!composites.count(m))
            return entry("N3", RuleStatus::Fail,
                         json{{"x", c.object_name(x)},
                              {"y", c.object_name(y)},
                              {"z", c.object_name(z)},
                              {"missing", morphism_name(c, m)},
                              {"composites", composites.size()},
                              {"hom_xz", c.hom(x, z).size()}});
      }
  return entry("N3", RuleStatus::Pass, json{{"paths", checked}});
}

CriterionResult n4_dynkin_quiver(const CriterionContext& ctx) {
  if (!ctx.free) return not_applicable("N4", "category is not free");
  const auto& c = *ctx.category;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : ctx.ei.quiver.arrows) edges.emplace_back(a.src, a.tgt);
  auto report = dynkin_classify(c.object_count(), edges);
  json types = json::array();
  for (const auto& comp : report.components) {
    if (!comp.dynkin()) {
      json objs = json::array();
      for (auto v : comp.witness_vertices) objs.push_back(c.object_name(v));
      return entry("N4", RuleStatus::Fail, json{{"reason", comp.witness}, {"objects", objs}});
    }
    types.push_back(comp.type);
  }
  return entry("N4", RuleStatus::Pass, json{{"types", types}});
}

CriterionResult n5_one_side_transitive(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  for (const auto& pc : ctx.pairs) {
    if (pc.g_transitive || pc.h_transitive) continue;
    auto w = pair_json(c, pc);
    w["orbits_under_G"] = side_orbit_count(pc.hom.biset, false);
    w["orbits_under_H"] = side_orbit_count(pc.hom.biset, true);
    return entry("N5", RuleStatus::Fail, w);
  }
  return entry("N5", RuleStatus::Pass, json{{"pairs", ctx.pairs.size()}});
}

CriterionResult n6_op_prime_trivial(const CriterionContext& ctx) {
  if (ctx.p < 5) return not_applicable("N6", "requires p >= 5");
  const auto& c = *ctx.category;
  for (const auto& pc : ctx.pairs) {
    const auto& b = pc.hom.biset;
    if (b.right_acts_trivially(pc.opg) || b.left_acts_trivially(pc.oph)) continue;
    auto w = pair_json(c, pc);
    w["op_prime_G"] = subgroup_names(c, pc.opg);
    w["op_prime_H"] = subgroup_names(c, pc.oph);
    return entry("N6", RuleStatus::Fail, w);
  }
  return entry("N6", RuleStatus::Pass, json{{"pairs", ctx.pairs.size()}});
}

CriterionResult n7_p_subgroup_stabilizers(const CriterionContext& ctx) {
  if (ctx.p < 5) return not_applicable("N7", "requires p >= 5");
  const auto& c = *ctx.category;
  for (const auto& pc : ctx.pairs)
    for (int side = 0; side < 2; ++side) {
      const auto& grp = side == 0 ? pc.hom.g : pc.hom.h;
      const auto& stab = side == 0 ? pc.chain.g0 : pc.chain.h0;
      for (auto e : p_elements(*grp, ctx.p)) {
        if (e == 0) continue;
        auto p_sub = subgroup_generated(grp, {e});
        auto meet = intersect(p_sub, stab);
        if (meet.is_trivial() || meet.order() == p_sub.order()) continue;
        auto w = pair_json(c, pc);
        w["side"] = side == 0 ? "G" : "H";
        w["p_subgroup"] = subgroup_names(c, p_sub);
        w["intersection"] = subgroup_names(c, meet);
        return entry("N7", RuleStatus::Fail, w);
      }
    }
  return entry("N7", RuleStatus::Pass, json{{"pairs", ctx.pairs.size()}});
}

CriterionResult n8_normal_sylow(const CriterionContext& ctx) {
  if (ctx.p < 17) return not_applicable("N8", "requires p >= 17");
  const auto& c = *ctx.category;
  for (const auto& pc : ctx.pairs)
    for (int side = 0; side < 2; ++side) {
      auto sylow = normal_sylow(side == 0 ? pc.hom.g : pc.hom.h, ctx.p);
      if (!sylow) continue;
      const bool trivial =
          side == 0 ? pc.hom.biset.right_acts_trivially(*sylow) : pc.hom.biset.left_acts_trivially(*sylow);
      if (trivial) continue;
      auto w = pair_json(c, pc);
      w["side"] = side == 0 ? "G" : "H";
      w["normal_sylow"] = subgroup_names(c, *sylow);
      return entry("N8", RuleStatus::Fail, w);
    }
  return entry("N8", RuleStatus::Pass, json{{"pairs", ctx.pairs.size()}});
}

CriterionResult n9_double_cosets(const CriterionContext& ctx) {
  if (gated(ctx.p)) return not_applicable("N9", "gated for p = 2, 3");
  const auto& c = *ctx.category;
  for (const auto& pc : ctx.pairs) {
    for (int side = 0; side < 2; ++side) {
      const bool transitive = side == 0 ? pc.h_transitive : pc.g_transitive;
      const auto d = side == 0 ? pc.d_h : pc.d_g;
      if (!transitive || d <= 3) continue;
      auto w = pair_json(c, pc);
      w["side"] = side == 0 ? "H" : "G";
      w["stabilizer"] = subgroup_names(c, side == 0 ? pc.chain.h1 : pc.chain.g1);
      w["double_cosets"] = d;
      return entry("N9", RuleStatus::Fail, w);
    }
  }
  return entry("N9", RuleStatus::Pass, json{{"pairs", ctx.pairs.size()}});
}

CriterionResult n10_adjacency(const CriterionContext& ctx) {
  if (!ctx.free) return not_applicable("N10", "category is not free");
  if (gated(ctx.p)) return not_applicable("N10", "gated for p = 2, 3");
  const auto& c = *ctx.category;
  const auto& arrows = ctx.ei.quiver.arrows;
  struct AtObject {
    std::size_t arrow;
    bool transitive;
    Subgroup stab;  // stabilizer of the orbit under the other end's group
  };
  std::size_t checked = 0;
  for (std::size_t y = 0; y < c.object_count(); ++y) {
    std::vector<AtObject> at;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto& arr = arrows[a];
      if (arr.tgt != y && arr.src != y) continue;
      auto chain = stabilizer_chain(arr.biset, 0);
      if (arr.tgt == y)
        at.push_back({a, arr.biset.left_transitive(), on_object_group(ctx.groups[y], chain.h1)});
      else
        at.push_back({a, arr.biset.right_transitive(), on_object_group(ctx.groups[y], chain.g1)});
    }
    if (at.size() < 2 || at.size() > 3) continue;
    ++checked;
    auto arrow_names = [&](const std::vector<AtObject>& list) {
      json out = json::array();
      for (const auto& e : list) out.push_back(arrows[e.arrow].name);
      return out;
    };
    std::vector<AtObject> intransitive;
    for (const auto& e : at)
      if (!e.transitive) intransitive.push_back(e);
    if ((at.size() == 2 && intransitive.size() == 2) || (at.size() == 3 && !intransitive.empty()))
      return entry("N10", RuleStatus::Fail,
                   json{{"object", c.object_name(y)},
                        {"degree", at.size()},
                        {"condition", "transitive"},
                        {"intransitive_arrows", arrow_names(intransitive)}});
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        const auto d = double_coset_count(at[i].stab, at[j].stab);
        if (d == 1) continue;
        return entry("N10", RuleStatus::Fail,
                     json{{"object", c.object_name(y)},
                          {"condition", "double cosets"},
                          {"arrows", arrow_names({at[i], at[j]})},
                          {"stabilizers", json::array({subgroup_names(c, at[i].stab), subgroup_names(c, at[j].stab)})},
                          {"double_cosets", d}});
      }
  }
  return entry("N10", RuleStatus::Pass, json{{"objects_checked", checked}});
}

namespace {

// Smallest GF(p^e), p^e <= 2^16, containing the roots of unity of order the p'-part of the exponent.
std::optional<Field> splitting_field(const FiniteGroup& g, std::uint32_t p, std::uint64_t seed) {
  auto m = g.exponent();
  while (m % p == 0) m /= p;
  std::uint64_t q = p;
  for (std::uint32_t e = 1; q <= Field::kMaxOrder; ++e, q *= p)
    if ((q - 1) % m == 0) return e == 1 ? Field::prime(p) : Field::extension(p, e, seed);
  return std::nullopt;
}

}  // namespace

CriterionResult n11_induced_tops(const CriterionContext& ctx) {
  if (!ctx.options.extended) return not_applicable("N11", "extended checks are off");
  if (ctx.p < 5) return not_applicable("N11", "requires p >= 5");
  const auto& c = *ctx.category;
  bool unknown = false;
  json checked = json::array();
  for (const auto& pc : ctx.pairs)
    for (int side = 0; side < 2; ++side) {
      const bool transitive = side == 0 ? pc.h_transitive : pc.g_transitive;
      if (!transitive) continue;
      const auto& grp = side == 0 ? pc.hom.h : pc.hom.g;
      const auto& s0 = side == 0 ? pc.chain.h0 : pc.chain.g0;
      const auto& s1 = side == 0 ? pc.chain.h1 : pc.chain.g1;
      auto w = pair_json(c, pc);
      w["side"] = side == 0 ? "H" : "G";
      auto field = splitting_field(*grp, ctx.p, ctx.options.seed);
      if (!field) {
        w["reason"] = "no splitting field within the size budget";
        checked.push_back(w);
        unknown = true;
        continue;
      }
      w["field"] = field->describe();
      try {
        auto g1 = s1.as_group();
        std::vector<std::size_t> g0_in_g1;
        for (auto e : s0.elements()) g0_in_g1.push_back(*g1->index_of(grp->element(e)));
        std::sort(g0_in_g1.begin(), g0_in_g1.end());
        auto simples1 = simple_modules(*field, g1, ctx.options.seed);
        auto simples = simple_modules(*field, grp, ctx.options.seed);
        auto top1 = top_and_socle_multiplicities(permutation_module(*field, Subgroup(g1, g0_in_g1)), simples1,
                                                 ctx.options.seed)
                        .top;
        for (std::size_t i = 0; i < simples1.size(); ++i) {
          if (top1[i] == 0) continue;
          auto top = top_and_socle_multiplicities(induce(simples1[i], s1), simples, ctx.options.seed).top;
          const auto total = std::accumulate(top.begin(), top.end(), std::size_t{0});
          const auto repeated = std::any_of(top.begin(), top.end(), [](std::size_t m) { return m > 1; });
          if (repeated || total > 3) {
            w["simple_dim"] = simples1[i].dim;
            w["top_multiplicities"] = top;
            w["condition"] = repeated ? "repeated summand" : "more than three summands";
            return entry("N11", RuleStatus::Fail, w);
          }
        }
        checked.push_back(w);
      } catch (const FieldNotSplittingError& e) {
        w["reason"] = e.what();
        checked.push_back(w);
        unknown = true;
      } catch (const ResourceError& e) {
        w["reason"] = e.what();
        checked.push_back(w);
        unknown = true;
      }
    }
  return entry("N11", unknown ? RuleStatus::Unknown : RuleStatus::Pass,
               json{{"checked", checked}, {"unchecked", json::array({"summand shape", "block separation"})}});
}

CriterionResult s0_single_object(const CriterionContext& ctx) {
  if (ctx.category->object_count() != 1) return not_applicable("S0", "more than one object");
  const auto& g = *ctx.groups[0];
  const bool cyclic = sylow_p_cyclic(g, ctx.p);
  return entry("S0", cyclic ? RuleStatus::Pass : RuleStatus::Fail,
               json{{"group_order", g.order()}, {"sylow_order", p_part(g.order(), ctx.p)}});
}

CriterionResult s1_single_morphism(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  if (c.object_count() != 2 || ctx.pairs.size() != 1) return not_applicable("S1", "not a two-object category");
  const auto& pc = ctx.pairs[0];
  if (pc.hom.points.size() != 1) return not_applicable("S1", "C(x,y) has more than one morphism");
  auto w = pair_json(c, pc);
  w["morphism"] = morphism_name(c, pc.hom.points[0]);
  return entry("S1", RuleStatus::Pass, w);
}

CriterionResult s2_free_invertible(const CriterionContext& ctx) {
  if (!ctx.free) return not_applicable("S2", "category is not free");
  if (ctx.p != 0)
    for (const auto& g : ctx.groups)
      if (g->order() % ctx.p == 0) return not_applicable("S2", "an automorphism order is divisible by p");
  const auto& c = *ctx.category;
  auto res = decide_free_invertible(c, ctx.p, ctx.options.seed);
  const auto& q = *res.quiver;
  json w{{"field", q.field.describe()}, {"vertices", q.vertices.size()}, {"arrows", q.arrow_count()}};
  if (res.finite) {
    json types = json::array();
    for (const auto& comp : res.report.components) types.push_back(comp.type);
    w["types"] = types;
    return entry("S2", RuleStatus::Pass, w);
  }
  for (const auto& comp : res.report.components) {
    if (comp.dynkin()) continue;
    json verts = json::array();
    for (auto v : comp.witness_vertices) verts.push_back(q.vertex_name(v));
    w["reason"] = comp.witness;
    w["quiver_vertices"] = verts;
    break;
  }
  return entry("S2", RuleStatus::Fail, w);
}

CriterionResult s3_two_object_p_groups(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  if (c.object_count() != 2 || ctx.pairs.size() != 1) return not_applicable("S3", "not a two-object category");
  if (!ctx.p_groups) return not_applicable("S3", "automorphism groups are not p-groups");
  const auto& pc = ctx.pairs[0];
  const auto p = ctx.p;
  const auto go = pc.hom.g->order(), ho = pc.hom.h->order();
  const auto m = pc.hom.points.size();
  auto w = pair_json(c, pc);
  w["G_order"] = go;
  w["H_order"] = ho;
  w["hom_size"] = m;
  if (!is_cyclic(*pc.hom.g) || !is_cyclic(*pc.hom.h)) {
    w["condition"] = "G and H cyclic";
    return entry("S3", RuleStatus::Fail, w);
  }
  if (!pc.g_transitive && !pc.h_transitive) {
    w["condition"] = "G or H transitive";
    return entry("S3", RuleStatus::Fail, w);
  }
  std::string sub;
  if (m <= 1)
    sub = "a";
  else if (go * ho <= 3)
    sub = "b";
  else if (p == 2 && m == 2 && (go == 1 || ho == 1))
    sub = "c";
  else if (p == 2 && m == 2 && ((go == 2 && pc.g_transitive) || (ho == 2 && pc.h_transitive)))
    sub = "d";
  else if (p == 3 && m == 3 && go == 3 && ho == 3 && pc.g_transitive && pc.h_transitive)
    sub = "e";
  if (sub.empty()) {
    w["condition"] = "none of the subcases (a)-(e)";
    return entry("S3", RuleStatus::Fail, w);
  }
  w["subcase"] = sub;
  return entry("S3", RuleStatus::Pass, w);
}

CriterionResult s4_three_object_p_groups(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  if (c.object_count() != 3) return not_applicable("S4", "not a three-object category");
  if (!ctx.p_groups || ctx.p < 5) return not_applicable("S4", "requires p-groups with p >= 5");
  for (const auto& pc : ctx.pairs)
    if (pc.hom.points.size() > 1) {
      auto w = pair_json(c, pc);
      w["hom_size"] = pc.hom.points.size();
      w["condition"] = "at most one morphism between distinct objects";
      return entry("S4", RuleStatus::Fail, w);
    }
  auto exponent = [&](std::size_t x) { return log_p(ctx.groups[x]->order(), ctx.p); };
  if (ctx.pairs.size() == 3)
    return entry("S4", RuleStatus::Pass, json{{"family", "first"}, {"case", "I"}});
  if (ctx.pairs.size() != 2) return not_applicable("S4", "unexpected shape");
  const auto& a = ctx.pairs[0];
  const auto& b = ctx.pairs[1];
  std::size_t middle, e1, e2;
  bool opposite_family;
  if (a.y == b.y) {
    middle = a.y, e1 = a.x, e2 = b.x, opposite_family = false;
  } else if (a.x == b.x) {
    middle = a.x, e1 = a.y, e2 = b.y, opposite_family = true;
  } else {
    return not_applicable("S4", "unexpected shape");
  }
  const auto r = exponent(e1), s = exponent(middle), t = exponent(e2);
  json w{{"family", "second"},
         {"opposite", opposite_family},
         {"middle", c.object_name(middle)},
         {"r", r},
         {"s", s},
         {"t", t}};
  if (s == 0) {
    w["case"] = "II";
    return entry("S4", RuleStatus::Pass, w);
  }
  if (r == 0 && t == 0) {
    w["case"] = "IV";
    return entry("S4", RuleStatus::Pass, w);
  }
  w["case"] = "III";
  return entry("S4", RuleStatus::Fail, w);
}

CriterionResult s5_both_transitive(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  if (c.object_count() != 2 || ctx.pairs.size() != 1) return not_applicable("S5", "not a two-object category");
  if (gated(ctx.p)) return not_applicable("S5", "gated for p = 2, 3");
  const auto& pc = ctx.pairs[0];
  if (!pc.g_transitive || !pc.h_transitive) return not_applicable("S5", "not both sides transitive");
  const bool g_ok = pc.hom.biset.right_acts_trivially(pc.opg);
  const bool h_ok = pc.hom.biset.left_acts_trivially(pc.oph);
  auto w = pair_json(c, pc);
  w["op_prime_G_trivial"] = g_ok;
  w["op_prime_H_trivial"] = h_ok;
  return entry("S5", g_ok && h_ok ? RuleStatus::Pass : RuleStatus::Fail, w);
}

CriterionResult s6_abelian(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  if (c.object_count() != 2 || ctx.pairs.size() != 1) return not_applicable("S6", "not a two-object category");
  if (gated(ctx.p)) return not_applicable("S6", "gated for p = 2, 3");
  const auto& pc = ctx.pairs[0];
  if (!pc.hom.g->is_abelian() || !pc.hom.h->is_abelian()) return not_applicable("S6", "groups are not abelian");
  if (!pc.g_transitive && !pc.h_transitive) return not_applicable("S6", "neither side transitive");
  const auto n = pc.h_transitive ? pc.n_h : pc.n_g;
  const bool g_ok = pc.hom.biset.right_acts_trivially(pc.opg);
  const bool h_ok = pc.hom.biset.left_acts_trivially(pc.oph);
  auto w = pair_json(c, pc);
  w["s"] = pc.s;
  w["t"] = pc.t;
  w["n"] = n;
  w["transitive_side"] = pc.h_transitive ? "H" : "G";
  w["op_prime_trivial"] = g_ok && h_ok;
  std::size_t bound;
  if (pc.s > 1 && pc.t > 1)
    bound = 1;
  else if (pc.s > 1 || pc.t > 1)
    bound = 2;
  else
    bound = 3;
  w["bound"] = bound;
  w["threshold"] = "s, t > 1";
  return entry("S6", g_ok && h_ok && n <= bound ? RuleStatus::Pass : RuleStatus::Fail, w);
}

CriterionResult s7_chain(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  const auto n = c.object_count();
  if (n < 2) return not_applicable("S7", "fewer than two objects");
  if (!ctx.p_groups) return not_applicable("S7", "automorphism groups are not p-groups");
  if (ctx.pairs.size() != n * (n - 1) / 2) return not_applicable("S7", "objects are not totally ordered");
  for (const auto& pc : ctx.pairs)
    if (pc.hom.points.size() != 1) return not_applicable("S7", "a hom-set has more than one morphism");
  for (const auto& g : ctx.groups)
    if (!is_cyclic(*g)) return not_applicable("S7", "an automorphism group is not cyclic");
  // Order objects by the number of objects below them.
  std::vector<std::size_t> below(n, 0), order(n);
  for (const auto& pc : ctx.pairs) ++below[pc.y];
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  json chain = json::array();
  for (auto x : order) chain.push_back(c.object_name(x));
  return entry("S7", RuleStatus::Pass, json{{"chain", chain}});
}

}  // namespace rules

namespace {

std::string open_hint(const CriterionContext& ctx) {
  const auto n = ctx.category->object_count();
  std::string key;
  if (gated(ctx.p) && !ctx.p_groups)
    key = "gated";
  else if (n == 2)
    key = "two-object";
  else if (ctx.p_groups && n == 3)
    key = "branched";
  else if (ctx.p_groups)
    key = "p-groups";
  else if (ctx.free)
    key = "free";
  else
    key = "general";
  return open_hints().at(key);
}

Verdict decide_connected(const CategoryPtr& c, std::uint32_t p, const DecideOptions& options);

// Decides proper full subcategories on 2 (and for p-group categories 3) objects.
std::optional<CriterionResult> subcategory_check(const CriterionContext& ctx) {
  const auto& c = *ctx.category;
  const auto n = c.object_count();
  if (n < 3) return std::nullopt;
  auto linked = [&](std::size_t a, std::size_t b) { return !c.hom(a, b).empty() || !c.hom(b, a).empty(); };
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (linked(a, b)) subsets.push_back({a, b});
  if (ctx.p_groups && n > 3)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t d = b + 1; d < n; ++d) {
          const int links = linked(a, b) + linked(a, d) + linked(b, d);
          if (links >= 2) subsets.push_back({a, b, d});
        }
  DecideOptions sub_options = ctx.options;
  sub_options.recurse = false;
  json unknown = json::array();
  for (const auto& objs : subsets) {
    auto sub = full_subcategory(c, objs);
    auto v = decide_connected(sub.category, ctx.p, sub_options);
    if (v.outcome == Outcome::Infinite) {
      const auto* why = v.deciding();
      json objects = json::array();
      for (auto x : objs) objects.push_back(c.object_name(x));
      return entry("SUB", RuleStatus::Fail, json{{"objects", objects}, {"failed", to_json(*why)}});
    }
    if (v.outcome == Outcome::Unknown) unknown.push_back(object_list(c, objs));
  }
  return entry("SUB", RuleStatus::Pass, json{{"subcategories", subsets.size()}, {"undecided", unknown}});
}

Verdict decide_connected(const CategoryPtr& c, std::uint32_t p, const DecideOptions& options) {
  Verdict v;
  v.char_p = p;
  v.field_used = p == 0 ? "characteristic 0" : Field::prime(p).describe();
  auto ctx = make_context(c, p, options);
  auto record = [&](CriterionResult r) {
    v.trace.push_back(std::move(r));
    return v.trace.back().status;
  };
  using Rule = CriterionResult (*)(const CriterionContext&);
  for (Rule rule : {rules::n1_cyclic_sylow, rules::n2_single_orbit, rules::n3_composites, rules::n4_dynkin_quiver,
                    rules::n5_one_side_transitive, rules::n6_op_prime_trivial, rules::n7_p_subgroup_stabilizers,
                    rules::n8_normal_sylow, rules::n9_double_cosets, rules::n10_adjacency})
    if (record(rule(ctx)) == RuleStatus::Fail) {
      v.outcome = Outcome::Infinite;
      return v;
    }
  if (options.recurse)
    if (auto sub = subcategory_check(ctx); sub && record(*sub) == RuleStatus::Fail) {
      v.outcome = Outcome::Infinite;
      return v;
    }
  if (record(rules::n11_induced_tops(ctx)) == RuleStatus::Fail) {
    v.outcome = Outcome::Infinite;
    return v;
  }
  for (Rule rule : {rules::s0_single_object, rules::s1_single_morphism, rules::s2_free_invertible,
                    rules::s3_two_object_p_groups, rules::s4_three_object_p_groups, rules::s5_both_transitive,
                    rules::s6_abelian, rules::s7_chain}) {
    const auto status = record(rule(ctx));
    if (status == RuleStatus::Pass || status == RuleStatus::Fail) {
      const auto& w = v.trace.back().witness;
      if (v.trace.back().rule == "S2") v.field_used = w.at("field").get<std::string>() + " (ordinary quiver)";
      v.outcome = status == RuleStatus::Pass ? Outcome::Finite : Outcome::Infinite;
      return v;
    }
  }
  record(entry("OPEN", RuleStatus::Unknown, json{{"hint", open_hint(ctx)}}));
  v.outcome = Outcome::Unknown;
  return v;
}

}  // namespace

Verdict decide(const FiniteCategory& c, std::uint32_t p, const DecideOptions& options) {
  if (p != 0 && !is_prime(p)) throw InputError("characteristic must be 0 or a prime, got " + std::to_string(p));
  validate_ei(c);
  auto cur = std::make_shared<const FiniteCategory>(c);
  Verdict v;
  v.char_p = p;
  v.field_used = p == 0 ? "characteristic 0" : Field::prime(p).describe();
  if (!is_skeletal(c)) {
    auto sk = skeleton(c);
    json kept = json::array(), dropped = json::array();
    std::vector<bool> in(c.object_count(), false);
    for (auto x : sk.object_to_parent) {
      in[x] = true;
      kept.push_back(c.object_name(x));
    }
    for (std::size_t x = 0; x < c.object_count(); ++x)
      if (!in[x]) dropped.push_back(c.object_name(x));
    v.trace.push_back(entry("NORM", RuleStatus::Pass, json{{"step", "skeleton"}, {"kept", kept}, {"dropped", dropped}}));
    cur = sk.category;
  }
  auto comps = connected_components(*cur);
  if (comps.size() == 1) {
    auto inner = decide_connected(cur, p, options);
    v.outcome = inner.outcome;
    v.field_used = inner.field_used;
    v.trace.insert(v.trace.end(), inner.trace.begin(), inner.trace.end());
    return v;
  }
  v.trace.push_back(entry("NORM", RuleStatus::Pass, json{{"step", "components"}, {"count", comps.size()}}));
  json summary = json::array();
  bool any_infinite = false, all_finite = true;
  for (const auto& comp : comps) {
    auto sub = full_subcategory(*cur, comp);
    auto inner = decide_connected(sub.category, p, options);
    const auto scope = "component " + object_list(*cur, comp);
    for (auto r : inner.trace) {
      r.scope = scope;
      v.trace.push_back(std::move(r));
    }
    if (inner.field_used != v.field_used && inner.trace.back().rule == "S2") v.field_used = inner.field_used;
    summary.push_back(json{{"objects", object_list(*cur, comp)}, {"outcome", to_string(inner.outcome)}});
    any_infinite = any_infinite || inner.outcome == Outcome::Infinite;
    all_finite = all_finite && inner.outcome == Outcome::Finite;
  }
  v.outcome = any_infinite ? Outcome::Infinite : all_finite ? Outcome::Finite : Outcome::Unknown;
  const auto status = any_infinite ? RuleStatus::Fail : all_finite ? RuleStatus::Pass : RuleStatus::Unknown;
  v.trace.push_back(entry("COMP", status, json{{"components", summary}}));
  return v;
}

Verdict decide_symmetrized(const FiniteCategory& c, std::uint32_t p, const DecideOptions& options) {
  auto a = decide(c, p, options);
  auto b = decide(*opposite(c), p, options);
  const bool a_decided = a.outcome != Outcome::Unknown, b_decided = b.outcome != Outcome::Unknown;
  if (a_decided && b_decided && a.outcome != b.outcome)
    throw ConsistencyError("category and its opposite received " + to_string(a.outcome) + " and " +
                           to_string(b.outcome));
  Verdict v;
  v.char_p = p;
  v.outcome = a_decided ? a.outcome : b.outcome;
  v.field_used = a_decided || !b_decided ? a.field_used : b.field_used;
  v.trace = a.trace;
  for (auto r : b.trace) {
    r.scope = r.scope.empty() ? "opposite" : "opposite, " + r.scope;
    v.trace.push_back(std::move(r));
  }
  return v;
}

namespace {

std::size_t object_by_name(const FiniteCategory& c, const json& name) {
  auto x = c.object_index(name.get<std::string>());
  if (!x) throw InputError("witness names an unknown object");
  return *x;
}

std::size_t morphism_by_name(const FiniteCategory& c, const json& name) {
  auto m = c.morphism_index(name.get<std::string>());
  if (!m) throw InputError("witness names an unknown morphism");
  return *m;
}

bool recheck_in(const FiniteCategory& c, std::uint32_t p, const CriterionResult& r) {
  if (r.status != RuleStatus::Fail) return true;
  const auto& w = r.witness;
  if (r.rule == "N1") {
    auto g = automorphism_group(c, object_by_name(c, w.at("object")));
    return !sylow_p_cyclic(*g, p);
  }
  if (r.rule == "SUB") {
    std::vector<std::size_t> objs;
    for (const auto& o : w.at("objects")) objs.push_back(object_by_name(c, o));
    auto sub = full_subcategory(c, objs);
    auto inner = w.at("failed");
    CriterionResult ir{inner.at("rule"), inner.at("citation"), *status_from_string(inner.at("status")),
                       inner.at("witness"), ""};
    return recheck_in(*sub.category, p, ir);
  }
  if (r.rule == "N3") {
    const auto x = object_by_name(c, w.at("x")), y = object_by_name(c, w.at("y")), z = object_by_name(c, w.at("z"));
    const auto m = morphism_by_name(c, w.at("missing"));
    if (c.morphism(m).src != x || c.morphism(m).tgt != z) return false;
    for (auto a : c.hom(x, y))
      for (auto b : c.hom(y, z))
        if (c.compose_checked(b, a) == m) return false;
    return true;
  }
  if (!w.contains("x") || !w.contains("y")) return true;
  const auto x = object_by_name(c, w.at("x")), y = object_by_name(c, w.at("y"));
  if (c.hom(x, y).empty()) return false;
  auto hb = hom_biset(c, x, y);
  const auto& b = hb.biset;
  if (r.rule == "N2") {
    const auto m1 = morphism_by_name(c, w.at("representatives")[0]);
    const auto m2 = morphism_by_name(c, w.at("representatives")[1]);
    auto ids = b.orbit_ids();
    auto pos = [&](std::size_t m) { return c.position_in_hom(m); };
    return c.morphism(m1).src == x && c.morphism(m1).tgt == y && c.morphism(m2).src == x &&
           c.morphism(m2).tgt == y && ids[pos(m1)] != ids[pos(m2)];
  }
  if (r.rule == "N5") return !b.left_transitive() && !b.right_transitive();
  if (r.rule == "N6")
    return !b.right_acts_trivially(o_p_prime(hb.g, p)) && !b.left_acts_trivially(o_p_prime(hb.h, p));
  if (r.rule == "N9") {
    auto chain = stabilizer_chain(b, 0);
    if (w.at("side") == "H") return b.left_transitive() && double_coset_count(chain.h1, chain.h1) > 3;
    return b.right_transitive() && double_coset_count(chain.g1, chain.g1) > 3;
  }
  return true;
}

}  // namespace

bool recheck_witness(const FiniteCategory& c, std::uint32_t p, const CriterionResult& r) {
  if (is_skeletal(c)) return recheck_in(c, p, r);
  return recheck_in(*skeleton(c).category, p, r);
}

json to_json(const CriterionResult& r) {
  return json{{"rule", r.rule},
              {"citation", r.citation},
              {"status", to_string(r.status)},
              {"witness", r.witness},
              {"scope", r.scope}};
}

json to_json(const Verdict& v) {
  json trace = json::array();
  for (const auto& r : v.trace) trace.push_back(to_json(r));
  return json{{"schema", "eirep-verdict/1"},
              {"outcome", to_string(v.outcome)},
              {"characteristic", v.char_p},
              {"field", v.field_used},
              {"trace", trace}};
}

Verdict verdict_from_json(const json& j) {
  try {
    Verdict v;
    auto outcome = outcome_from_string(j.at("outcome").get<std::string>());
    if (!outcome) throw InputError("unknown outcome " + j.at("outcome").dump());
    v.outcome = *outcome;
    v.char_p = j.at("characteristic").get<std::uint32_t>();
    v.field_used = j.at("field").get<std::string>();
    for (const auto& e : j.at("trace")) {
      auto status = status_from_string(e.at("status").get<std::string>());
      if (!status) throw InputError("unknown status " + e.at("status").dump());
      v.trace.push_back(CriterionResult{e.at("rule").get<std::string>(), e.at("citation").get<std::string>(), *status,
                                        e.at("witness"), e.value("scope", std::string{})});
    }
    return v;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed verdict document: ") + e.what());
  }
}

}  // namespace eirep
