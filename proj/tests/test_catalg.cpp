#include <algorithm>
#include <random>

#include "doctest.h"
#include "eirep/catalg.hpp"
#include "eirep/error.hpp"
#include "support.hpp"

using namespace eirep;
using eirep::testing::perm;

namespace {

CategoryPtr a2() {
  auto t = FiniteGroup::trivial();
  return two_object_category(t, t, eirep::testing::singleton_biset(t, t));
}

std::size_t arrow(const FiniteCategory& c, std::size_t i = 0) { return c.hom(0, 1).at(i); }

Matrix scalar(Fq a) {
  Matrix m(1, 1);
  m(0, 0) = a;
  return m;
}

// Representation of a one-object category from a module over its automorphism group.
CatRep rep_of_module(const CategoryPtr& c, const FqModule& m) {
  std::vector<Matrix> mats;
  auto aut = automorphism_group(*c, 0);
  for (std::size_t id = 0; id < c->morphism_count(); ++id) {
    const auto e = element_of_morphism(*aut, id);
    mats.push_back(element_matrix(m, *m.group->index_of(aut->element(e))));
  }
  return make_rep(c, m.field, {m.dim}, mats);
}

Subgroup random_subgroup(const GroupPtr& g, std::mt19937_64& rng) {
  std::vector<std::size_t> seeds;
  const auto k = rng() % 3;
  for (std::size_t i = 0; i < k; ++i) seeds.push_back(rng() % g->order());
  return subgroup_generated(g, seeds);
}

FqModule random_module(const Field& f, const GroupPtr& g, std::mt19937_64& rng) {
  auto m = permutation_module(f, random_subgroup(g, rng));
  if (rng() % 2) m = direct_sum(m, trivial_module(f, g));
  if (m.dim > 6) m = trivial_module(f, g);
  return conjugate(m, random_invertible(f, m.dim, rng));
}

CategoryPtr random_two_object(std::mt19937_64& rng) {
  auto menu = eirep::testing::group_menu();
  auto g = menu[rng() % 6];
  auto h = menu[rng() % 6];
  return two_object_category(g, h, eirep::testing::random_transitive_biset(h, g, rng));
}

// Valid witness with a random connecting map in the span of the valid ones.
TwoObjectRepWitness random_witness(const Field& f, const FiniteCategory& c, std::mt19937_64& rng) {
  auto s = two_object_shape(c);
  TwoObjectRepWitness w{random_module(f, s.hom.g, rng), random_module(f, s.hom.h, rng), Matrix(), s.alpha};
  w.phi = Matrix(w.w.dim, w.v.dim);
  for (const auto& b : valid_connecting_maps(w.v, w.w, s.hom.biset, s.alpha))
    w.phi = mat_add(f, w.phi, mat_scale(f, static_cast<Fq>(rng() % f.order()), b));
  return w;
}

// All vectors of F^n.
std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{Vec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (Fq a = 0; a < f.order(); ++a) {
        auto w = v;
        w[i] = a;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("category algebra of S3 over C2") {
  auto c = eirep::testing::fixture_a();
  auto alg = category_algebra(c, Field::prime(7));
  CHECK(alg.dim() == 14);
  std::mt19937_64 rng(1);
  auto random_vec = [&] {
    Vec v(alg.dim());
    for (auto& a : v) a = static_cast<Fq>(rng() % 7);
    return v;
  };
  for (int i = 0; i < 20; ++i) {
    auto a = random_vec(), b = random_vec(), d = random_vec();
    CHECK(alg.multiply(alg.unit(), a) == a);
    CHECK(alg.multiply(a, alg.unit()) == a);
    CHECK(alg.multiply(alg.multiply(a, b), d) == alg.multiply(a, alg.multiply(b, d)));
  }
  // Non-composable pairs multiply to zero.
  const auto alpha = arrow(*c);
  CHECK(!alg.basis_product(alpha, alpha));
  CHECK(!alg.basis_product(c->identity(0), c->identity(1)));
}

TEST_CASE("category algebra of A2 and of a group") {
  auto c = a2();
  auto alg = category_algebra(c, Field::prime(2));
  CHECK(alg.dim() == 3);
  Vec a(3, 0);
  a[arrow(*c)] = 1;
  CHECK(alg.multiply(a, a) == Vec(3, 0));

  auto s3 = full_subcategory(*eirep::testing::fixture_a(), {1}).category;
  auto galg = category_algebra(s3, Field::prime(5));
  auto aut = automorphism_group(*s3, 0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto p = galg.basis_product(static_cast<std::size_t>(aut->label(i)), static_cast<std::size_t>(aut->label(j)));
      REQUIRE(p);
      CHECK(static_cast<std::int64_t>(*p) == aut->label(aut->mul(i, j)));
    }
}

TEST_CASE("make_rep rejects non-functorial data") {
  auto c = a2();
  auto f = Field::prime(3);
  std::vector<Matrix> mats(3);
  mats[c->identity(0)] = Matrix::identity(1);
  mats[c->identity(1)] = scalar(2);
  mats[arrow(*c)] = scalar(1);
  CHECK_THROWS_AS(make_rep(c, f, {1, 1}, mats), StructuralError);
  mats[c->identity(1)] = Matrix::identity(1);
  mats[arrow(*c)] = Matrix(2, 1);
  CHECK_THROWS_AS(make_rep(c, f, {1, 1}, mats), StructuralError);
  mats[arrow(*c)] = scalar(2);
  CHECK(functoriality_issues(make_rep(c, f, {1, 1}, mats)).empty());
}

TEST_CASE("rep_from_generators extends a witness on S3 over C2") {
  auto c = eirep::testing::fixture_a();
  auto f = Field::prime(7);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = random_witness(f, *c, rng);
    auto full = rep_from_witness(w, c);
    std::map<std::size_t, Matrix> given;
    for (auto x : {std::size_t{0}, std::size_t{1}}) {
      auto aut = automorphism_group(*c, x);
      for (const auto& s : aut->generators()) {
        const auto id = static_cast<std::size_t>(aut->label(*aut->index_of(s)));
        given[id] = full.mats[id];
      }
    }
    const auto alpha = c->hom(0, 1)[w.alpha];
    given[alpha] = full.mats[alpha];
    auto built = rep_from_generators(c, f, full.dims, given);
    CHECK(built.mats == full.mats);
  }
  CHECK_THROWS_AS(rep_from_generators(c, f, {1, 1}, {}), InputError);
}

TEST_CASE("zero connecting map is always valid") {
  auto c = eirep::testing::fixture_a();
  auto f = Field::prime(5);
  auto s = two_object_shape(*c);
  TwoObjectRepWitness w{regular_module(f, s.hom.g), regular_module(f, s.hom.h), Matrix(6, 2), s.alpha};
  CHECK(rep_valid(w, s.hom.biset, s.alpha));
  auto r = rep_from_witness(w, c);
  for (auto m : c->hom(0, 1)) CHECK(r.mats[m].is_zero());
  w.phi = Matrix(2, 6);
  CHECK_THROWS_AS(rep_valid(w, s.hom.biset, s.alpha), InputError);
}

TEST_CASE("valid connecting maps from kC3 to the projective cover form a 3-dimensional space") {
  auto c = eirep::testing::fixture_a();
  auto f = Field::prime(3);
  auto s = two_object_shape(*c);
  auto v = regular_module(f, s.hom.g);
  // Projective cover of the trivial module in characteristic 3: k induced from a transposition.
  auto w = permutation_module(f, subgroup_generated(s.hom.h, {*s.hom.h->index_of(s.hom.h->generators()[1])}));
  REQUIRE(w.dim == 3);
  auto maps = valid_connecting_maps(v, w, s.hom.biset, s.alpha);
  CHECK(maps.size() == 3);

  // Independent route: count the valid maps among all 3^6 matrices.
  std::size_t valid = 0;
  for (const auto& entries : all_vectors(f, 6)) {
    Matrix phi(3, 2);
    phi.data = entries;
    if (rep_valid(TwoObjectRepWitness{v, w, phi, s.alpha}, s.hom.biset, s.alpha)) ++valid;
  }
  CHECK(valid == 27);

  TwoObjectRepWitness wit{v, w, maps[0], s.alpha};
  auto r = rep_from_witness(wit, c);
  CHECK(r.dims[0] + r.dims[1] == 5);
  CHECK(functoriality_issues(r).empty());
  // Restricting to {x} recovers V.
  auto rx = restrict_rep(r, full_subcategory(*c, {0}));
  CHECK(rx.dims[0] == 2);
  CHECK(is_isomorphic(object_module(r, 0), v));
}

TEST_CASE("for C2 over C2 validity is phi(Top M) inside Soc N when p = 2") {
  auto f = Field::prime(2);
  auto g = FiniteGroup::cyclic(2);
  auto h = FiniteGroup::cyclic(2);
  auto b = eirep::testing::singleton_biset(h, g);
  std::mt19937_64 rng(3);
  std::vector<FqModule> ms_g, ms_h;
  for (int i = 0; i < 4; ++i) {
    auto p = random_invertible(f, 2, rng);
    ms_g.push_back(conjugate(regular_module(f, g), p));
    ms_g.push_back(conjugate(direct_sum(trivial_module(f, g), trivial_module(f, g)), p));
    ms_h.push_back(conjugate(regular_module(f, h), p));
    ms_h.push_back(conjugate(direct_sum(trivial_module(f, h), trivial_module(f, h)), p));
  }
  auto vectors = all_vectors(f, 2);
  std::size_t checked = 0;
  for (const auto& m : ms_g)
    for (const auto& n : ms_h) {
      // Radical of M: all (g - 1) v; socle of N: all vectors fixed by h.
      std::vector<Vec> rad, soc;
      for (const auto& v : vectors) {
        auto gv = apply(f, m.action[0], v);
        Vec d(2);
        for (std::size_t i = 0; i < 2; ++i) d[i] = f.sub(gv[i], v[i]);
        rad.push_back(d);
        if (apply(f, n.action[0], v) == v) soc.push_back(v);
      }
      for (const auto& entries : all_vectors(f, 4)) {
        Matrix phi(2, 2);
        phi.data = entries;
        bool expected = true;
        for (const auto& r : rad)
          if (apply(f, phi, r) != Vec(2, 0)) expected = false;
        for (const auto& v : vectors)
          if (std::find(soc.begin(), soc.end(), apply(f, phi, v)) == soc.end()) expected = false;
        CHECK(rep_valid(TwoObjectRepWitness{m, n, phi, 0}, b, 0) == expected);
        ++checked;
      }
    }
  CHECK(checked == 8 * 8 * 16);
}

TEST_CASE("A2 representations") {
  auto c = a2();
  auto f = Field::prime(5);
  auto t = automorphism_group(*c, 0);
  TwoObjectRepWitness w{trivial_module(f, t), trivial_module(f, automorphism_group(*c, 1)), scalar(1), 0};
  auto r = rep_from_witness(w, c);
  CHECK(r.mats[arrow(*c)] == scalar(1));
  CHECK(catrep_hom_space(r, r).dim == 1);

  w.phi = scalar(0);
  auto z = rep_from_witness(w, c);
  CHECK(catrep_hom_space(r, z).dim == 1);
  CHECK(catrep_hom_space(z, r).dim == 1);
  CHECK(!catrep_is_isomorphic(r, z));

  std::vector<Matrix> sx(3, Matrix(0, 0)), sy(3, Matrix(0, 0));
  sx[c->identity(0)] = Matrix::identity(1);
  sx[arrow(*c)] = Matrix(0, 1);
  sy[c->identity(1)] = Matrix::identity(1);
  sy[arrow(*c)] = Matrix(1, 0);
  auto simple_x = make_rep(c, f, {1, 0}, sx);
  auto simple_y = make_rep(c, f, {0, 1}, sy);
  CHECK(catrep_hom_space(simple_x, simple_y).dim == 0);
  CHECK(catrep_hom_space(simple_y, simple_x).dim == 0);
  CHECK(catrep_is_isomorphic(direct_sum(simple_x, simple_y), z));
}

TEST_CASE("induction from the Kronecker subcategory over F5 collapses to one dimension") {
  auto h = FiniteGroup::cyclic(2);
  auto g = FiniteGroup::trivial();
  auto c = two_object_category(g, h, eirep::testing::group_biset(h, g, {}));
  REQUIRE(c->hom(0, 1).size() == 2);
  auto d = subcategory(*c, {0, 1}, c->hom(0, 1));
  CHECK(d.category->morphism_count() == 4);
  auto f = Field::prime(5);
  std::map<std::size_t, Matrix> given;
  const auto& dh = d.category->hom(0, 1);
  given[dh[0]] = scalar(1);
  given[dh[1]] = scalar(3);
  auto n = rep_from_generators(d.category, f, {1, 1}, given);
  auto up = induce_rep(n, d, c);
  CHECK(up.dims == std::vector<std::size_t>{1, 0});
  CHECK(functoriality_issues(up).empty());

  // Equal maps do not collapse.
  given[dh[1]] = scalar(1);
  auto up2 = induce_rep(rep_from_generators(d.category, f, {1, 1}, given), d, c);
  CHECK(up2.dims == std::vector<std::size_t>{1, 1});
}

TEST_CASE("induction over F2 along the trivial-h subcategory gives dims (1, 1)") {
  auto h = FiniteGroup::cyclic(2);
  auto g = FiniteGroup::trivial();
  auto c = two_object_category(g, h, eirep::testing::singleton_biset(h, g));
  auto d = subcategory(*c, {0, 1}, c->hom(0, 1));
  auto f = Field::prime(2);
  auto n = rep_from_generators(d.category, f, {1, 1}, {{d.category->hom(0, 1)[0], scalar(1)}});
  auto up = induce_rep(n, d, c);
  CHECK(up.dims == std::vector<std::size_t>{1, 1});
  auto aut_y = automorphism_group(*c, 1);
  for (std::size_t i = 0; i < aut_y->order(); ++i)
    CHECK(up.mats[static_cast<std::size_t>(aut_y->label(i))] == Matrix::identity(1));
  CHECK(catrep_is_isomorphic(restrict_rep(up, d), n));
  // The induced module at y is not the induced group module.
  auto trivial_in_h = trivial_subgroup(aut_y);
  CHECK(induce(restrict(object_module(up, 1), trivial_in_h), trivial_in_h).dim == 2);
}

TEST_CASE("induce from a full subcategory then restrict is the identity") {
  std::mt19937_64 rng(11);
  const std::vector<std::uint32_t> primes{2, 3, 5, 7};
  int cases = 0;
  while (cases < 200) {
    auto c = random_two_object(rng);
    const std::size_t x = rng() % 2;
    auto d = full_subcategory(*c, {x});
    auto f = Field::prime(primes[rng() % primes.size()]);
    auto aut = automorphism_group(*d.category, 0);
    auto n = rep_of_module(d.category, random_module(f, aut, rng));
    auto up = induce_rep(n, d, c);
    CHECK(functoriality_issues(up).empty());
    // Dimension bound: one copy of N per morphism out of the image of D.
    for (std::size_t z = 0; z < 2; ++z) CHECK(up.dims[z] <= c->hom(x, z).size() * n.dims[0]);
    auto back = restrict_rep(up, d);
    CHECK(catrep_is_isomorphic(back, n, rng()));
    ++cases;
  }
}

TEST_CASE("induction along the identity embedding is the identity") {
  auto c = eirep::testing::fixture_a();
  auto f = Field::prime(7);
  std::mt19937_64 rng(2);
  auto d = full_subcategory(*c, {0, 1});
  for (int i = 0; i < 5; ++i) {
    auto w = random_witness(f, *d.category, rng);
    auto r = rep_from_witness(w, d.category);
    auto up = induce_rep(r, d, c);
    CHECK(catrep_is_isomorphic(restrict_rep(up, d), r));
    auto fast = induce_two_object_fastpath(w, d, *c);
    CHECK(fast.v.dim == w.v.dim);
    CHECK(fast.w.dim == w.w.dim);
  }
}

TEST_CASE("induction fast path agrees with the general construction") {
  std::mt19937_64 rng(17);
  const std::vector<std::uint32_t> primes{2, 3, 5};
  int agreed = 0, rejected = 0;
  for (int trial = 0; trial < 400 && agreed < 200; ++trial) {
    auto c = random_two_object(rng);
    auto cs = two_object_shape(*c);
    if (!cs.hom.biset.left_transitive()) continue;
    auto gsub = random_subgroup(cs.hom.g, rng);
    auto hsub = random_subgroup(cs.hom.h, rng);
    const auto alpha = cs.hom.points[cs.alpha];
    std::vector<std::size_t> morphisms;
    for (auto e : gsub.elements()) morphisms.push_back(static_cast<std::size_t>(cs.hom.g->label(e)));
    for (auto e : hsub.elements()) morphisms.push_back(static_cast<std::size_t>(cs.hom.h->label(e)));
    for (auto a : gsub.elements())
      for (auto b : hsub.elements())
        morphisms.push_back(c->compose_checked(c->compose_checked(static_cast<std::size_t>(cs.hom.h->label(b)), alpha),
                                               static_cast<std::size_t>(cs.hom.g->label(a))));
    std::sort(morphisms.begin(), morphisms.end());
    morphisms.erase(std::unique(morphisms.begin(), morphisms.end()), morphisms.end());
    auto d = subcategory(*c, {0, 1}, morphisms);
    auto f = Field::prime(primes[rng() % primes.size()]);
    auto w = random_witness(f, *d.category, rng);
    TwoObjectRepWitness fast;
    try {
      fast = induce_two_object_fastpath(w, d, *c);
    } catch (const PreconditionError&) {
      ++rejected;
      continue;
    }
    auto general = induce_rep(rep_from_witness(w, d.category), d, c);
    auto via_fast = rep_from_witness(fast, c);
    CHECK(functoriality_issues(via_fast).empty());
    CHECK(catrep_is_isomorphic(via_fast, general, rng()));
    ++agreed;
  }
  CHECK(agreed >= 100);
  MESSAGE("fast path agreed " << agreed << " times, hypotheses failed " << rejected << " times");
}

TEST_CASE("witness extraction and reconstruction are inverse") {
  std::mt19937_64 rng(23);
  const std::vector<std::uint32_t> primes{2, 3, 5, 7};
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_two_object(rng);
    auto f = Field::prime(primes[rng() % primes.size()]);
    auto w = random_witness(f, *c, rng);
    auto r = rep_from_witness(w, c);
    CHECK(functoriality_issues(r).empty());
    auto back = witness_from_rep(r);
    CHECK(back.phi == w.phi);
    CHECK(back.alpha == w.alpha);
    CHECK(element_matrices(back.v) == element_matrices(transport_by_labels(w.v, back.v.group)));
    CHECK(rep_from_witness(back, c).mats == r.mats);
  }
}

TEST_CASE("two_object_shape preconditions") {
  CHECK_THROWS_AS(two_object_shape(*full_subcategory(*eirep::testing::fixture_a(), {1}).category), PreconditionError);
  auto g = FiniteGroup::trivial();
  auto b = eirep::testing::disjoint_union(eirep::testing::singleton_biset(g, g), eirep::testing::singleton_biset(g, g));
  CHECK_THROWS_AS(two_object_shape(*two_object_category(g, g, b)), PreconditionError);
}
