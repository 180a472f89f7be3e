#include "eirep/ordinary_quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dsu.hpp"
#include "eirep/biset.hpp"

namespace eirep {

std::size_t OrdinaryQuiver::arrow_count() const {
  std::size_t n = 0;
  for (const auto& a : arrows) n += a.multiplicity;
  return n;
}

std::string OrdinaryQuiver::vertex_name(std::size_t v) const {
  const auto& vx = vertices.at(v);
  return objects[vx.object] + ":S" + std::to_string(vx.simple) + "(dim " + std::to_string(vx.dim) + ")";
}

namespace {

// Pairwise non-isomorphic composition factors.
std::vector<FqModule> distinct_factors(const FqModule& m, std::uint64_t seed) {
  std::vector<FqModule> out;
  for (auto& s : chop(m, seed))
    if (!identify_simple(s, out)) out.push_back(std::move(s));
  return out;
}

}  // namespace

OrdinaryQuiver ordinary_quiver(const EIQuiver& q, const Field& f, std::uint64_t seed,
                               const std::vector<std::uint32_t>& alpha_points) {
  check_ei_quiver(q);
  for (std::size_t x = 0; x < q.groups.size(); ++x)
    if (q.groups[x]->order() % f.characteristic() == 0)
      throw PreconditionError("order of the automorphism group of " + q.objects[x] + " is not invertible in " +
                              f.describe());
  OrdinaryQuiver out;
  out.field = f;
  out.objects = q.objects;
  std::vector<std::vector<FqModule>> simples;
  for (std::size_t x = 0; x < q.groups.size(); ++x) {
    simples.push_back(simple_modules(f, q.groups[x], seed));
    out.object_vertices.emplace_back();
    for (std::size_t i = 0; i < simples[x].size(); ++i) {
      out.object_vertices[x].push_back(out.vertices.size());
      out.vertices.push_back(OrdinaryVertex{x, i, simples[x][i].dim, is_trivial_action(simples[x][i])});
    }
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    const auto& b = arr.biset;
    const std::uint32_t alpha = a < alpha_points.size() ? alpha_points[a] : 0;
    if (alpha >= b.size()) throw InputError("orbit representative out of range for arrow " + arr.name);
    const auto& g = b.right_group();
    const auto& h = b.left_group();
    auto chain = stabilizer_chain(b, alpha);
    auto g1 = chain.g1.as_group();
    auto h1 = chain.h1.as_group();
    std::vector<std::size_t> g0_in_g1;
    for (auto e : chain.g0.elements()) g0_in_g1.push_back(*g1->index_of(g->element(e)));
    std::sort(g0_in_g1.begin(), g0_in_g1.end());
    auto us = distinct_factors(permutation_module(f, Subgroup(g1, g0_in_g1)), seed);
    // U over H1 through h alpha = alpha g.
    auto to_h1 = [&](const FqModule& u) {
      return pullback(u, h1, [&](std::size_t i) {
        const auto hi = *h->index_of(h1->element(i));
        return *g1->index_of(g->element(match_left_to_right(b, alpha, hi)));
      });
    };
    std::vector<FqModule> vs, ws;
    for (const auto& v : simples[arr.src]) vs.push_back(restrict(v, chain.g1));
    for (const auto& w : simples[arr.tgt]) ws.push_back(restrict(w, chain.h1));
    std::vector<SummandMultiplicities> sm;
    for (const auto& u : us) {
      SummandMultiplicities s{u.dim, {}, {}};
      auto uh = to_h1(u);
      for (const auto& v : vs) s.e.push_back(hom_space(u, v).dim);
      for (const auto& w : ws) s.f.push_back(hom_space(uh, w).dim);
      sm.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < ws.size(); ++j) {
        std::size_t mult = 0;
        for (const auto& s : sm) mult += s.e[i] * s.f[j];
        if (mult > 0)
          out.arrows.push_back(
              OrdinaryArrow{out.object_vertices[arr.src][i], out.object_vertices[arr.tgt][j], mult, a});
      }
    out.summands.push_back(std::move(sm));
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : out.arrows) edges.emplace_back(a.src, a.tgt);
  if (directed_cycle(out.vertices.size(), edges)) throw ConsistencyError("ordinary quiver has a directed cycle");
  // The trivial modules carry a copy of the underlying quiver.
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arr = q.arrows[a];
    const auto s = out.object_vertices[arr.src][0], t = out.object_vertices[arr.tgt][0];
    const bool found = std::any_of(out.arrows.begin(), out.arrows.end(),
                                   [&](const OrdinaryArrow& o) { return o.ei_arrow == a && o.src == s && o.tgt == t; });
    if (!found) throw ConsistencyError("ordinary quiver misses the arrow " + arr.name + " between trivial modules");
  }
  return out;
}

OrdinaryQuiver ordinary_quiver(const FiniteCategory& c, const Field& f, std::uint64_t seed) {
  return ordinary_quiver(underlying_ei_quiver(c).quiver, f, seed);
}

Field ordinary_quiver_field(const FiniteCategory& c) {
  std::vector<GroupPtr> groups;
  for (std::size_t x = 0; x < c.object_count(); ++x) groups.push_back(automorphism_group(c, x));
  return Field::prime(splitting_prime(groups));
}

std::optional<std::vector<std::size_t>> directed_cycle(std::size_t vertices,
                                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> out(vertices);
  for (auto [s, t] : edges) out.at(s).push_back(t);
  std::vector<int> state(vertices, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  std::optional<std::vector<std::size_t>> cycle;
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    stack.push_back(v);
    for (auto w : out[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle = std::vector<std::size_t>(it, stack.end());
        return true;
      }
      if (state[w] == 0 && visit(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < vertices; ++v)
    if (state[v] == 0 && visit(v)) return cycle;
  return std::nullopt;
}

bool DynkinReport::all_dynkin() const {
  return std::all_of(components.begin(), components.end(), [](const DynkinComponent& c) { return c.dynkin(); });
}

namespace {

DynkinComponent classify_component(std::vector<std::size_t> verts,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  DynkinComponent out;
  out.vertices = std::move(verts);
  const auto& vs = out.vertices;
  auto not_dynkin = [&](std::string why, std::vector<std::size_t> witness) {
    out.type = "not-Dynkin";
    out.witness = std::move(why);
    out.witness_vertices = std::move(witness);
    return out;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> multiplicity;
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto v : vs) adj[v];
  for (auto [s, t] : edges) {
    if (s == t) return not_dynkin("loop at vertex " + std::to_string(s), {s});
    auto key = std::minmax(s, t);
    if (++multiplicity[key] == 2)
      return not_dynkin("multiple edge between " + std::to_string(key.first) + " and " + std::to_string(key.second),
                        {key.first, key.second});
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  if (edges.size() >= vs.size()) {
    // Find a cycle by walking a spanning forest.
    std::map<std::size_t, std::size_t> parent;
    std::map<std::size_t, std::size_t> depth;
    std::vector<std::size_t> order{vs[0]};
    parent[vs[0]] = vs[0];
    depth[vs[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto v = order[i];
      for (auto w : adj[v]) {
        if (w == parent[v]) continue;
        if (parent.count(w)) {
          // Close the cycle v .. lca .. w.
          std::vector<std::size_t> left{v}, right{w};
          auto a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return not_dynkin("cycle", left);
        }
        parent[w] = v;
        depth[w] = depth[v] + 1;
        order.push_back(w);
      }
    }
  }
  std::vector<std::size_t> branch;
  for (auto v : vs) {
    if (adj[v].size() >= 4) {
      std::vector<std::size_t> w{v};
      w.insert(w.end(), adj[v].begin(), adj[v].begin() + 4);
      return not_dynkin("vertex of degree " + std::to_string(adj[v].size()), w);
    }
    if (adj[v].size() == 3) branch.push_back(v);
  }
  const auto n = vs.size();
  if (branch.empty()) {
    out.type = "A" + std::to_string(n);
    return out;
  }
  if (branch.size() >= 2) {
    // Path between the first two branch points.
    std::map<std::size_t, std::size_t> parent{{branch[0], branch[0]}};
    std::vector<std::size_t> order{branch[0]};
    for (std::size_t i = 0; i < order.size(); ++i)
      for (auto w : adj[order[i]])
        if (!parent.count(w)) {
          parent[w] = order[i];
          order.push_back(w);
        }
    std::vector<std::size_t> path{branch[1]};
    while (path.back() != branch[0]) path.push_back(parent[path.back()]);
    return not_dynkin("two branch points", path);
  }
  const auto center = branch[0];
  std::vector<std::size_t> legs;
  for (auto start : adj[center]) {
    std::size_t len = 1;
    auto prev = center, cur = start;
    while (adj[cur].size() == 2) {
      auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) {
    out.type = "D" + std::to_string(n);
  } else if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4) {
    out.type = "E" + std::to_string(n);
  } else {
    return not_dynkin("branch with legs " + std::to_string(legs[0]) + ", " + std::to_string(legs[1]) + ", " +
                          std::to_string(legs[2]),
                      vs);
  }
  return out;
}

}  // namespace

DynkinReport dynkin_classify(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  detail::Dsu dsu(vertices);
  for (auto [s, t] : edges) {
    if (s >= vertices || t >= vertices) throw InputError("edge endpoint out of range");
    dsu.unite(s, t);
  }
  std::size_t count = 0;
  auto ids = dsu.class_ids(&count);
  std::vector<std::vector<std::size_t>> comp_vertices(count);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> comp_edges(count);
  for (std::size_t v = 0; v < vertices; ++v) comp_vertices[ids[v]].push_back(v);
  for (const auto& e : edges) comp_edges[ids[e.first]].push_back(e);
  DynkinReport report;
  for (std::size_t c = 0; c < count; ++c) report.components.push_back(classify_component(comp_vertices[c], comp_edges[c]));
  return report;
}

DynkinReport dynkin_classify(const Quiver& q) { return dynkin_classify(q.vertices.size(), q.arrows); }

DynkinReport dynkin_classify(const OrdinaryQuiver& q) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : q.arrows)
    for (std::size_t k = 0; k < a.multiplicity; ++k) edges.emplace_back(a.src, a.tgt);
  return dynkin_classify(q.vertices.size(), edges);
}

FreeInvertibleResult decide_free_invertible(const FiniteCategory& c, std::uint32_t p, std::uint64_t seed) {
  FreeInvertibleResult out;
  if (!is_free(c)) {
    out.reason = "category is not free";
    return out;
  }
  if (p != 0)
    for (std::size_t x = 0; x < c.object_count(); ++x)
      if (c.hom(x, x).size() % p == 0) {
        out.reason = "order of C(" + c.object_name(x) + ", " + c.object_name(x) + ") is divisible by " + std::to_string(p);
        return out;
      }
  out.applicable = true;
  out.quiver = ordinary_quiver(c, ordinary_quiver_field(c), seed);
  out.report = dynkin_classify(*out.quiver);
  out.finite = out.report.all_dynkin();
  return out;
}

}  // namespace eirep
