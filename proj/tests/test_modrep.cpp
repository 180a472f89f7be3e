#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "eirep/error.hpp"
#include "eirep/modrep.hpp"
#include "support.hpp"

using namespace eirep;
using eirep::testing::perm;

namespace {

std::vector<std::size_t> dims_of(const std::vector<FqModule>& ms) {
  std::vector<std::size_t> d;
  for (const auto& m : ms) d.push_back(m.dim);
  std::sort(d.begin(), d.end());
  return d;
}

GroupPtr s3() { return FiniteGroup::symmetric(3); }

// Subgroup of S3 generated by the transposition (0 1).
Subgroup s3_transposition(const GroupPtr& g) { return subgroup_generated(g, {*g->index_of(perm({1, 0, 2}))}); }

FqModule sign_module(const Field& f, const GroupPtr& g) {
  std::vector<Matrix> action;
  for (const auto& s : g->generators()) {
    // Parity by counting inversions.
    std::size_t inv = 0;
    for (std::uint32_t i = 0; i < s.degree(); ++i)
      for (std::uint32_t j = i + 1; j < s.degree(); ++j) inv += s(i) > s(j);
    Matrix m(1, 1);
    m(0, 0) = inv % 2 ? f.neg(1) : 1;
    action.push_back(m);
  }
  return make_module(f, g, 1, action);
}

std::vector<GroupPtr> test_groups() {
  auto menu = eirep::testing::group_menu();
  menu.push_back(eirep::testing::dihedral(4));
  menu.push_back(FiniteGroup::symmetric(4));
  return menu;
}

Subgroup random_subgroup(const GroupPtr& g, std::mt19937_64& rng) {
  std::vector<std::size_t> seeds;
  const auto k = rng() % 3;
  for (std::size_t i = 0; i < k; ++i) seeds.push_back(rng() % g->order());
  return subgroup_generated(g, seeds);
}

// A random module over g: a permutation module, possibly conjugated and summed with the trivial module.
FqModule random_module(const Field& f, const GroupPtr& g, std::mt19937_64& rng) {
  auto m = permutation_module(f, random_subgroup(g, rng));
  if (rng() % 2) m = direct_sum(m, trivial_module(f, g));
  if (m.dim <= 8) m = conjugate(m, random_invertible(f, m.dim, rng));
  return m;
}

// Factor multisets agree up to isomorphism.
bool same_factors(std::vector<FqModule> a, std::vector<FqModule> b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && b[j].dim == x.dim && is_isomorphic(x, b[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("splitting primes") {
  CHECK(splitting_prime({s3()}) == 7);
  CHECK(splitting_prime({FiniteGroup::cyclic(2)}) == 3);
  CHECK(splitting_prime({FiniteGroup::trivial()}) == 2);
  CHECK(splitting_prime({FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) == 7);
  CHECK(splitting_prime({FiniteGroup::trivial()}, 2) == 3);
  // Oracle: l prime, coprime to |G|, and l - 1 divisible by the exponent.
  for (const auto& g : test_groups()) {
    const auto l = splitting_prime({g});
    CHECK(is_prime(l));
    CHECK(g->order() % l != 0);
    CHECK((l - 1) % g->exponent() == 0);
  }
}

TEST_CASE("module validation rejects broken relations") {
  const auto f = Field::prime(7);
  auto g = FiniteGroup::cyclic(2);
  Matrix bad(1, 1);
  bad(0, 0) = 3;  // 3^2 = 2 != 1 mod 7
  CHECK_THROWS_AS(make_module(f, g, 1, {bad}), StructuralError);
  CHECK_THROWS_AS(make_module(f, g, 2, {bad}), InputError);
  Matrix ok(1, 1);
  ok(0, 0) = 6;
  CHECK_NOTHROW(make_module(f, g, 1, {ok}));
}

TEST_CASE("permutation modules") {
  const auto f = Field::prime(7);
  auto g = s3();
  CHECK(permutation_module(f, s3_transposition(g)).dim == 3);
  auto whole = permutation_module(f, whole_group(g));
  CHECK(whole.dim == 1);
  CHECK(is_trivial_action(whole));
  CHECK(regular_module(f, g).dim == 6);
  CHECK_NOTHROW(validate_module(regular_module(f, g)));
}

TEST_CASE("chop: regular and natural modules of S3 over F7") {
  const auto f = Field::prime(7);
  auto g = s3();
  CHECK(dims_of(chop(regular_module(f, g), 1)) == std::vector<std::size_t>{1, 1, 2, 2});
  auto natural = permutation_action_module(f, g, 3, g->generators());
  CHECK(dims_of(chop(natural, 2)) == std::vector<std::size_t>{1, 2});
  CHECK(dims_of(chop(regular_module(f, FiniteGroup::trivial()))) == std::vector<std::size_t>{1});

  // Brute-force oracle: the natural module has exactly one invariant line, and the
  // sum-zero plane contains none, so its factors are {1, 2}.
  std::size_t invariant_lines = 0;
  for (Fq a = 0; a < 7; ++a)
    for (Fq b = 0; b < 7; ++b)
      for (Fq c = 0; c < 7; ++c) {
        const Vec v{a, b, c};
        auto lead = std::find_if(v.begin(), v.end(), [](Fq x) { return x != 0; });
        if (lead == v.end() || *lead != 1) continue;
        bool invariant = true;
        for (const auto& m : natural.action) {
          Subspace line(f, 3);
          line.add(v);
          invariant = invariant && line.contains(apply(f, m, v));
        }
        if (invariant) {
          ++invariant_lines;
          CHECK(f.add(f.add(a, b), c) != 0);
        }
      }
  CHECK(invariant_lines == 1);
}

TEST_CASE("hom spaces") {
  const auto f = Field::prime(7);
  auto g = s3();
  for (const auto& s : simple_modules(f, g)) CHECK(hom_space(s, s).dim == 1);
  auto k = trivial_module(f, g);
  CHECK(hom_space(k, permutation_module(f, s3_transposition(g))).dim == 1);
  CHECK(hom_space(regular_module(f, g), k).dim == 1);
  // Every basis element really intertwines.
  auto m = permutation_module(f, s3_transposition(g));
  auto hom = hom_space(m, m);
  CHECK(hom.dim == 2);
  for (const auto& x : hom.basis)
    for (std::size_t s = 0; s < m.action.size(); ++s)
      CHECK(mat_mul(f, x, m.action[s]) == mat_mul(f, m.action[s], x));
}

TEST_CASE("isomorphism tests") {
  const auto f = Field::prime(7);
  auto g = s3();
  auto k = trivial_module(f, g);
  CHECK(is_isomorphic(k, k));
  CHECK_FALSE(is_isomorphic(k, sign_module(f, g)));
  std::mt19937_64 rng(3);
  auto m = permutation_module(f, s3_transposition(g));
  auto a = conjugate(m, random_invertible(f, 3, rng));
  auto b = conjugate(m, random_invertible(f, 3, rng));
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (std::size_t s = 0; s < a.action.size(); ++s)
    CHECK(mat_mul(f, *iso, a.action[s]) == mat_mul(f, b.action[s], *iso));
  CHECK_FALSE(is_isomorphic(m, direct_sum(k, direct_sum(k, sign_module(f, g)))));
}

TEST_CASE("simple modules") {
  auto ss = simple_modules(Field::prime(7), s3());
  CHECK(dims_of(ss) == std::vector<std::size_t>{1, 1, 2});
  CHECK(is_trivial_action(ss[0]));
  CHECK(dims_of(simple_modules(Field::prime(3), FiniteGroup::cyclic(2))) == std::vector<std::size_t>{1, 1});
  CHECK(dims_of(simple_modules(Field::prime(5), FiniteGroup::trivial())) == std::vector<std::size_t>{1});
  // Over F2, C3 has a 2-dimensional simple with endomorphism ring F4.
  CHECK_THROWS_AS(simple_modules(Field::prime(2), FiniteGroup::cyclic(3)), FieldNotSplittingError);
  CHECK(dims_of(simple_modules(Field::extension(2, 2), FiniteGroup::cyclic(3))) == std::vector<std::size_t>{1, 1, 1});
  // Modular case: S3 over F3 has the trivial and sign modules only.
  CHECK(dims_of(simple_modules(Field::prime(3), s3())) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("sum of squared dimensions of simples over splitting primes is the group order") {
  for (const auto& g : test_groups()) {
    const auto f = Field::prime(splitting_prime({g}));
    std::size_t total = 0;
    for (const auto& s : simple_modules(f, g, 17)) total += s.dim * s.dim;
    CHECK(total == g->order());
  }
}

TEST_CASE("restriction") {
  const auto f = Field::prime(7);
  auto g = s3();
  auto ss = simple_modules(f, g);
  auto c2 = s3_transposition(g);
  CHECK(dims_of(chop(restrict(ss[2], c2))) == std::vector<std::size_t>{1, 1});
  auto triv = restrict(ss[2], trivial_subgroup(g));
  CHECK(triv.dim == 2);
  CHECK(is_trivial_action(triv));

  // Regular kG restricted to A is |G:A| copies of regular kA.
  std::mt19937_64 rng(4);
  for (const auto& h : test_groups()) {
    const auto fh = Field::prime(splitting_prime({h}));
    auto a = random_subgroup(h, rng);
    auto simples_a = simple_modules(fh, a.as_group());
    auto got = composition_multiplicities(restrict(regular_module(fh, h), a), simples_a);
    auto one = composition_multiplicities(regular_module(fh, a.as_group()), simples_a);
    for (auto& x : one) x *= a.index();
    CHECK(got == one);
  }
}

TEST_CASE("induction") {
  const auto f = Field::prime(7);
  auto g = s3();
  auto c2 = s3_transposition(g);
  CHECK(is_isomorphic(induce(trivial_module(f, c2.as_group()), c2), permutation_module(f, c2)));
  CHECK(is_isomorphic(induce(regular_module(f, c2.as_group()), c2), regular_module(f, g)));
  // Faithful character of C3 (generator -> 2, a primitive cube root of 1 mod 7).
  auto c3 = subgroup_generated(g, {*g->index_of(perm({1, 2, 0}))});
  auto c3g = c3.as_group();
  Matrix w(1, 1);
  w(0, 0) = 2;
  auto chi = make_module(f, c3g, 1, std::vector<Matrix>(c3g->generators().size(), w));
  auto ind = induce(chi, c3);
  CHECK(ind.dim == 2);
  CHECK_NOTHROW(validate_module(ind));
  CHECK(dims_of(chop(ind)) == std::vector<std::size_t>{2});
}

TEST_CASE("top, socle and radical series") {
  const auto f7 = Field::prime(7);
  auto g = s3();
  auto ss = simple_modules(f7, g);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    auto ts = top_and_socle_multiplicities(ss[i], ss);
    std::vector<std::size_t> e(ss.size(), 0);
    e[i] = 1;
    CHECK(ts.top == e);
    CHECK(ts.socle == e);
  }
  auto reg = top_and_socle_multiplicities(regular_module(f7, g), ss);
  CHECK(reg.top == std::vector<std::size_t>{1, 1, 2});
  CHECK(reg.socle == std::vector<std::size_t>{1, 1, 2});
  CHECK(reg.radical_dim == 0);
  CHECK(radical_series(regular_module(f7, g), ss).size() == 1);

  // F2 C2 on two points: uniserial with layers k, k.
  const auto f2 = Field::prime(2);
  auto c2 = FiniteGroup::cyclic(2);
  auto s2 = simple_modules(f2, c2);
  REQUIRE(s2.size() == 1);
  auto p = regular_module(f2, c2);
  auto ts = top_and_socle_multiplicities(p, s2);
  CHECK(ts.top == std::vector<std::size_t>{1});
  CHECK(ts.socle == std::vector<std::size_t>{1});
  CHECK(ts.radical_dim == 1);
  CHECK(radical_series(p, s2) == std::vector<std::vector<std::size_t>>{{1}, {1}});
  FqModule zero{f2, c2, 0, {Matrix(0, 0)}};
  CHECK(radical_series(zero, s2).empty());
  CHECK_THROWS_AS(top_and_socle_multiplicities(regular_module(f7, g), {ss[0]}), InputError);
}

TEST_CASE("transport by labels and pullback") {
  const auto f = Field::prime(7);
  auto g = s3();
  std::vector<std::int64_t> labels(g->order());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = 100 + static_cast<std::int64_t>(i);
  auto lg = g->with_labels(labels);
  // Same group presented by other generators, with matching labels.
  auto other = FiniteGroup::generated_by(3, {perm({1, 2, 0}), perm({0, 2, 1})});
  std::vector<std::int64_t> other_labels(other->order());
  for (std::size_t i = 0; i < other->order(); ++i) other_labels[i] = 100 + static_cast<std::int64_t>(*g->index_of(other->element(i)));
  auto lo = other->with_labels(other_labels);
  auto m = permutation_action_module(f, lg, 3, lg->generators());
  auto moved = transport_by_labels(m, lo);
  CHECK_NOTHROW(validate_module(moved));
  CHECK(moved.action[0] == element_matrix(m, *g->index_of(perm({1, 2, 0}))));
}

TEST_CASE("property: Frobenius reciprocity as a dimension identity") {
  std::mt19937_64 rng(2024);
  auto groups = test_groups();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const std::uint32_t primes[] = {2, 3, 5, 7};
    const auto f = Field::prime(primes[rng() % 4]);
    auto a = random_subgroup(g, rng);
    auto ag = a.as_group();
    auto m = random_module(f, ag, rng);
    auto n = random_module(f, g, rng);
    CAPTURE(trial);
    CHECK(hom_space(induce(m, a), n).dim == hom_space(m, restrict(n, a)).dim);
    CHECK(hom_space(trivial_module(f, g), permutation_module(f, a)).dim == 1);
  }
}

TEST_CASE("property: Hom between permutation modules counts double cosets") {
  std::mt19937_64 rng(77);
  auto groups = test_groups();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const std::uint32_t primes[] = {2, 3, 5, 7, 11};
    const auto f = Field::prime(primes[rng() % 5]);
    auto a = random_subgroup(g, rng);
    auto b = random_subgroup(g, rng);
    CAPTURE(trial);
    CHECK(hom_space(permutation_module(f, a), permutation_module(f, a)).dim == double_coset_count(a, a));
    CHECK(hom_space(permutation_module(f, a), permutation_module(f, b)).dim == double_coset_count(a, b));
  }
}

TEST_CASE("property: chop factors are invariant under conjugation") {
  std::mt19937_64 rng(99);
  auto groups = test_groups();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const std::uint32_t primes[] = {2, 3, 5, 7};
    const auto f = Field::prime(primes[rng() % 4]);
    auto m = random_module(f, g, rng);
    if (m.dim > 12) continue;
    auto c = conjugate(m, random_invertible(f, m.dim, rng));
    auto fa = chop(m, rng());
    auto fb = chop(c, rng());
    CAPTURE(trial);
    std::size_t total = 0;
    for (const auto& x : fa) {
      total += x.dim;
      CHECK(is_irreducible(x, 5));
    }
    CHECK(total == m.dim);
    CHECK(same_factors(fa, fb));
  }
}
