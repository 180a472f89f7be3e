#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "eirep/biset.hpp"
#include "eirep/error.hpp"
#include "eirep/group.hpp"
#include "support.hpp"

using namespace eirep;
using eirep::testing::perm;

TEST_CASE("permutation composition applies the right factor first") {
  auto a = perm({1, 2, 0});
  auto b = perm({1, 0, 2});
  auto ab = a * b;
  CHECK(ab(0) == a(b(0)));
  CHECK(ab(2) == a(b(2)));
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(perm({0, 0, 1}), InputError);
}

TEST_CASE("standard groups have the expected orders") {
  CHECK(FiniteGroup::trivial()->order() == 1);
  CHECK(FiniteGroup::cyclic(7)->order() == 7);
  CHECK(FiniteGroup::symmetric(4)->order() == 24);
  CHECK(eirep::testing::dihedral(4)->order() == 8);
  CHECK(eirep::testing::klein_four()->order() == 4);
  auto p = FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::symmetric(3));
  CHECK(p->order() == 12);
  CHECK(FiniteGroup::symmetric(3)->exponent() == 6);
  CHECK(!FiniteGroup::symmetric(3)->is_abelian());
  CHECK(eirep::testing::klein_four()->is_abelian());
}

TEST_CASE("words evaluate back to their element") {
  auto g = FiniteGroup::symmetric(4);
  for (std::size_t i = 0; i < g->order(); ++i) {
    auto acc = Perm::identity(4);
    for (auto s : g->word(i)) acc = acc * g->generators()[s];
    CHECK(acc == g->element(i));
  }
}

TEST_CASE("subgroups reject non-closed element sets") {
  auto g = FiniteGroup::symmetric(3);
  auto t = *g->index_of(perm({1, 0, 2}));
  auto c = *g->index_of(perm({1, 2, 0}));
  CHECK(Subgroup(g, {0, t}).order() == 2);
  CHECK_THROWS_AS(Subgroup(g, {0, c}), InputError);
  CHECK(subgroup_generated(g, {c}).order() == 3);
  CHECK(is_normal(subgroup_generated(g, {c})));
  CHECK(!is_normal(subgroup_generated(g, {t})));
}

TEST_CASE("Sylow and p-residual data") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(sylow_p_cyclic(*s3, 2));
  CHECK(sylow_p_cyclic(*s3, 3));
  CHECK(!sylow_p_cyclic(*eirep::testing::klein_four(), 2));
  CHECK(sylow_p_cyclic(*eirep::testing::klein_four(), 0));
  CHECK(o_p_prime(s3, 3).order() == 3);
  CHECK(o_p_prime(s3, 2).order() == 6);
  CHECK(o_p_prime(s3, 5).order() == 1);
  CHECK(o_p_prime(s3, 0).order() == 1);
  CHECK(normal_sylow(s3, 3).has_value());
  CHECK(!normal_sylow(s3, 2).has_value());
  CHECK(p_part(12, 2) == 4);
  CHECK(p_part(12, 0) == 1);
  CHECK(is_p_group(*FiniteGroup::trivial(), 5));
}

namespace {

// Independent count: collect each double coset as an explicit set.
std::size_t double_cosets_by_sets(const Subgroup& a, const Subgroup& b) {
  const auto& g = *a.parent();
  std::set<std::set<std::size_t>> cosets;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> d;
    for (auto u : a.elements())
      for (auto v : b.elements()) d.insert(g.mul(g.mul(u, x), v));
    cosets.insert(d);
  }
  return cosets.size();
}

}  // namespace

TEST_CASE("double coset counts match explicit enumeration") {
  std::mt19937_64 rng(11);
  auto menu = eirep::testing::group_menu();
  menu.push_back(FiniteGroup::symmetric(4));
  menu.push_back(eirep::testing::dihedral(4));
  for (int trial = 0; trial < 60; ++trial) {
    auto g = menu[rng() % menu.size()];
    auto a = subgroup_generated(g, {rng() % g->order()});
    auto b = subgroup_generated(g, {rng() % g->order(), rng() % g->order()});
    CHECK(double_coset_count(a, b) == double_cosets_by_sets(a, b));
  }
  auto s3 = FiniteGroup::symmetric(3);
  auto t = subgroup_generated(s3, {*s3->index_of(perm({1, 0, 2}))});
  CHECK(double_coset_count(t, t) == 2);
}

TEST_CASE("biset construction rejects non-commuting actions") {
  auto c2 = FiniteGroup::cyclic(2);
  auto s3 = FiniteGroup::symmetric(3);
  // S3 acting on itself by left multiplication, "right" action by left multiplication too.
  auto b = eirep::testing::group_biset(s3, c2, {perm({1, 0, 2})});
  CHECK(b.size() == 6);
  std::vector<Perm> left, right;
  for (const auto& s : s3->generators()) {
    std::vector<std::uint32_t> im(6);
    for (std::uint32_t x = 0; x < 6; ++x) im[x] = b.act_left(*s3->index_of(s), x);
    left.emplace_back(im);
  }
  right.push_back(left.back());
  CHECK_THROWS_AS(Biset::from_generators(s3, c2, 6, left, right), StructuralError);
  right.back() = Perm::identity(6);
  CHECK_THROWS_AS(Biset::from_generators(s3, c2, 6, left, {perm({1, 0})}), StructuralError);
}

TEST_CASE("stabilizer chain of the S3 biset") {
  auto c2 = FiniteGroup::cyclic(2);
  auto s3 = FiniteGroup::symmetric(3);
  auto b = eirep::testing::group_biset(s3, c2, {perm({1, 0, 2})});
  auto chain = stabilizer_chain(b, 0);
  CHECK(chain.g0.order() == 1);
  CHECK(chain.g1.order() == 2);
  CHECK(chain.h0.order() == 1);
  CHECK(chain.h1.order() == 2);
  CHECK(b.left_transitive());
  CHECK(!b.right_transitive());
  CHECK(b.orbit_count() == 1);
}

TEST_CASE("stabilizer orders agree on random bisets" * doctest::description("property, 300 cases")) {
  std::mt19937_64 rng(4101);
  auto menu = eirep::testing::group_menu();
  int cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto h = menu[rng() % menu.size()];
    auto g = menu[rng() % menu.size()];
    auto b = eirep::testing::random_transitive_biset(h, g, rng);
    if (rng() % 3 == 0) b = eirep::testing::disjoint_union(b, eirep::testing::random_transitive_biset(h, g, rng));
    const auto alpha = static_cast<std::uint32_t>(rng() % b.size());
    auto c = stabilizer_chain(b, alpha);
    CHECK(c.g1.order() * c.h0.order() == c.g0.order() * c.h1.order());
    // Element orders in G1/G0 and H1/H0 agree under the matching g -> h.
    for (auto x : c.g1.elements()) {
      auto y = match_right_to_left(b, alpha, x);
      CHECK(c.h1.contains(y));
      std::size_t kx = 1, ky = 1;
      for (auto p = x; !c.g0.contains(p); p = g->mul(p, x)) ++kx;
      for (auto p = y; !c.h0.contains(p); p = h->mul(p, y)) ++ky;
      CHECK(kx == ky);
    }
    if (b.orbit_count() == 1) {
      CHECK(b.left_transitive() == c.g1.is_whole());
      CHECK(b.right_transitive() == c.h1.is_whole());
    }
    ++cases;
  }
  CHECK(cases == 300);
}

namespace {

// Independent biset product size: classes of pairs under the full group H.
std::size_t product_size_by_orbits(const Biset& outer, const Biset& inner) {
  const auto& h = *inner.left_group();
  std::set<std::set<std::pair<std::uint32_t, std::uint32_t>>> classes;
  for (std::uint32_t b2 = 0; b2 < outer.size(); ++b2)
    for (std::uint32_t b1 = 0; b1 < inner.size(); ++b1) {
      std::set<std::pair<std::uint32_t, std::uint32_t>> cls;
      for (std::size_t e = 0; e < h.order(); ++e) {
        auto eo = *outer.right_group()->index_of(h.element(e));
        auto ei = *inner.left_group()->index_of(h.element(h.inv(e)));
        cls.emplace(outer.act_right(b2, eo), inner.act_left(ei, b1));
      }
      classes.insert(cls);
    }
  return classes.size();
}

}  // namespace

TEST_CASE("biset products match orbit enumeration") {
  std::mt19937_64 rng(77);
  auto menu = eirep::testing::group_menu();
  for (int trial = 0; trial < 40; ++trial) {
    auto l = menu[rng() % menu.size()];
    auto h = menu[rng() % menu.size()];
    auto g = menu[rng() % menu.size()];
    auto inner = eirep::testing::random_transitive_biset(h, g, rng);
    auto outer = eirep::testing::random_transitive_biset(l, h, rng);
    auto p = biset_product(outer, inner);
    CHECK(p.product.size() == product_size_by_orbits(outer, inner));
  }
}

TEST_CASE("opposite biset swaps the acting groups") {
  auto c2 = FiniteGroup::cyclic(2);
  auto s3 = FiniteGroup::symmetric(3);
  auto b = eirep::testing::group_biset(s3, c2, {perm({1, 0, 2})});
  auto o = opposite_biset(b);
  CHECK(o.right_transitive());
  CHECK(!o.left_transitive());
  CHECK(o.orbit_count() == 1);
}
