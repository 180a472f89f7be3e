#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eirep/biset.hpp"
#include "eirep/category.hpp"
#include "eirep/group.hpp"

namespace eirep::testing {

inline Perm perm(std::initializer_list<std::uint32_t> im) { return Perm(std::vector<std::uint32_t>(im)); }

/// Carrier H with left multiplication and right multiplication through iota: G -> H,
/// given by the images of G's generators.
inline Biset group_biset(const GroupPtr& h, const GroupPtr& g, const std::vector<Perm>& iota) {
  std::vector<Perm> left, right;
  const auto n = h->order();
  for (const auto& s : h->generators()) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t b = 0; b < n; ++b) im[b] = static_cast<std::uint32_t>(*h->index_of(s * h->element(b)));
    left.emplace_back(im);
  }
  for (const auto& t : iota) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t b = 0; b < n; ++b) im[b] = static_cast<std::uint32_t>(*h->index_of(h->element(b) * t));
    right.emplace_back(im);
  }
  (void)g;
  return Biset::from_generators(h, g, n, left, right);
}

/// One point, both groups acting trivially.
inline Biset singleton_biset(const GroupPtr& h, const GroupPtr& g) {
  std::vector<Perm> left(h->generators().size(), Perm::identity(1));
  std::vector<Perm> right(g->generators().size(), Perm::identity(1));
  return Biset::from_generators(h, g, 1, left, right);
}

/// Transitive biset (H x G) / K where K is generated by the given pairs (h, g) of element indices.
/// The point [(a, b)] is acted on by h[(a, b)] = [(ha, b)] and [(a, b)]g = [(a, g^-1 b)].
inline Biset coset_biset(const GroupPtr& h, const GroupPtr& g,
                         const std::vector<std::pair<std::size_t, std::size_t>>& k_gens) {
  auto prod = FiniteGroup::direct_product(*h, *g);
  const auto dh = h->degree(), dg = g->degree();
  auto embed = [&](std::size_t hi, std::size_t gi) {
    std::vector<std::uint32_t> im(dh + dg);
    for (std::size_t i = 0; i < dh; ++i) im[i] = h->element(hi)(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < dg; ++i) im[dh + i] = static_cast<std::uint32_t>(dh + g->element(gi)(static_cast<std::uint32_t>(i)));
    return *prod->index_of(Perm(im));
  };
  std::vector<std::size_t> seeds;
  for (auto [a, b] : k_gens) seeds.push_back(embed(a, b));
  auto k = subgroup_generated(prod, seeds);
  auto reps = left_coset_reps(k);
  std::vector<std::size_t> coset_of(prod->order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (auto s : k.elements()) coset_of[prod->mul(reps[c], s)] = c;
  auto action = [&](std::size_t elem) {
    std::vector<std::uint32_t> im(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) im[c] = static_cast<std::uint32_t>(coset_of[prod->mul(elem, reps[c])]);
    return Perm(im);
  };
  std::vector<Perm> left, right;
  for (const auto& s : h->generators()) left.push_back(action(embed(*h->index_of(s), 0)));
  for (const auto& s : g->generators()) right.push_back(action(embed(0, g->inv(*g->index_of(s)))));
  return Biset::from_generators(h, g, reps.size(), left, right);
}

/// Disjoint union of bisets over the same groups.
inline Biset disjoint_union(const Biset& a, const Biset& b) {
  const auto n = a.size() + b.size();
  std::vector<Perm> left, right;
  const auto& h = *a.left_group();
  const auto& g = *a.right_group();
  for (const auto& s : h.generators()) {
    std::vector<std::uint32_t> im(n);
    const auto ia = *h.index_of(s), ib = *b.left_group()->index_of(s);
    for (std::uint32_t x = 0; x < a.size(); ++x) im[x] = a.act_left(ia, x);
    for (std::uint32_t x = 0; x < b.size(); ++x) im[a.size() + x] = static_cast<std::uint32_t>(a.size() + b.act_left(ib, x));
    left.emplace_back(im);
  }
  for (const auto& s : g.generators()) {
    std::vector<std::uint32_t> im(n);
    const auto ia = *g.index_of(s), ib = *b.right_group()->index_of(s);
    for (std::uint32_t x = 0; x < a.size(); ++x) im[x] = a.act_right(x, ia);
    for (std::uint32_t x = 0; x < b.size(); ++x) im[a.size() + x] = static_cast<std::uint32_t>(a.size() + b.act_right(x, ib));
    right.emplace_back(im);
  }
  return Biset::from_generators(a.left_group(), a.right_group(), n, left, right);
}

inline GroupPtr klein_four() {
  return FiniteGroup::generated_by(4, {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})});
}

inline GroupPtr dihedral(std::size_t n) {
  std::vector<std::uint32_t> r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return FiniteGroup::generated_by(n, {Perm(r), Perm(s)});
}

/// Small groups used by randomized suites.
inline std::vector<GroupPtr> group_menu() {
  return {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
          klein_four(),           FiniteGroup::symmetric(3), FiniteGroup::cyclic(5), FiniteGroup::cyclic(6)};
}

/// Random transitive biset over (h, g): K generated by 0-2 random pairs.
inline Biset random_transitive_biset(const GroupPtr& h, const GroupPtr& g, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  const auto count = rng() % 3;
  for (std::size_t i = 0; i < count; ++i) gens.emplace_back(rng() % h->order(), rng() % g->order());
  return coset_biset(h, g, gens);
}

/// S3 as a biset over (S3, C2) with C2 embedded as a transposition.
inline CategoryPtr fixture_a() {
  auto h = FiniteGroup::symmetric(3);
  auto g = FiniteGroup::cyclic(2);
  auto b = group_biset(h, g, {perm({1, 0, 2})});
  return two_object_category(g, h, b);
}

/// Both groups cyclic of order p, one morphism.
inline CategoryPtr fixture_c(std::size_t p) {
  auto g = FiniteGroup::cyclic(p);
  auto h = FiniteGroup::cyclic(p);
  return two_object_category(g, h, singleton_biset(h, g));
}

/// Trivial groups and two parallel morphisms.
inline CategoryPtr fixture_e() {
  auto t = FiniteGroup::trivial();
  auto one = singleton_biset(t, t);
  return two_object_category(t, t, disjoint_union(one, one));
}

/// Free category on objects 0..n-1 with the given groups and singleton arrows (src, tgt).
inline CategoryPtr singleton_quiver_category(const std::vector<GroupPtr>& groups,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  EIQuiver q;
  const char* names[] = {"x", "y", "z", "w", "u", "v"};
  for (std::size_t x = 0; x < groups.size(); ++x) q.objects.push_back(x < 6 ? names[x] : "o" + std::to_string(x));
  q.groups = groups;
  for (auto [s, t] : arrows)
    q.arrows.push_back(EIArrow{"a" + std::to_string(q.arrows.size()), s, t, singleton_biset(groups[t], groups[s])});
  return free_ei_cover(q).category;
}

/// Random free EI category on 2-4 objects; p-groups for p when p_groups is set.
inline CategoryPtr random_free_category(std::mt19937_64& rng, std::uint32_t p, bool p_groups) {
  auto menu = group_menu();
  std::vector<GroupPtr> choices;
  if (p_groups) {
    choices.push_back(FiniteGroup::trivial());
    choices.push_back(FiniteGroup::cyclic(p));
    if (p == 2) {
      choices.push_back(FiniteGroup::cyclic(4));
      choices.push_back(klein_four());
    }
  } else {
    choices = menu;
  }
  EIQuiver q;
  const std::size_t n = 2 + rng() % 3;
  for (std::size_t x = 0; x < n; ++x) {
    q.objects.push_back("o" + std::to_string(x));
    q.groups.push_back(choices[rng() % choices.size()]);
  }
  auto add = [&](std::size_t s, std::size_t t) {
    q.arrows.push_back(EIArrow{"a" + std::to_string(q.arrows.size()), s, t,
                               rng() % 3 == 0 ? singleton_biset(q.groups[t], q.groups[s])
                                              : random_transitive_biset(q.groups[t], q.groups[s], rng)});
  };
  for (std::size_t j = 1; j < n; ++j) {
    const auto i = rng() % j;
    const bool forward = rng() % 2;
    add(forward ? i : j, forward ? j : i);
    if (rng() % 8 == 0) add(forward ? i : j, forward ? j : i);
  }
  return free_ei_cover(q).category;
}

}  // namespace eirep::testing
