#include "eirep/catalg.hpp"

#include <algorithm>
#include <random>

namespace eirep {

std::optional<std::size_t> CategoryAlgebra::basis_product(std::size_t g, std::size_t f) const {
  const auto r = category->compose(g, f);
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

Vec CategoryAlgebra::multiply(const Vec& a, const Vec& b) const {
  const auto n = dim();
  if (a.size() != n || b.size() != n) throw InputError("algebra element has wrong length");
  Vec out(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    if (a[g] == 0) continue;
    for (std::size_t f = 0; f < n; ++f) {
      if (b[f] == 0) continue;
      if (auto p = basis_product(g, f)) out[*p] = field.add(out[*p], field.mul(a[g], b[f]));
    }
  }
  return out;
}

Vec CategoryAlgebra::unit() const {
  Vec u(dim(), 0);
  for (std::size_t x = 0; x < category->object_count(); ++x) u[category->identity(x)] = 1;
  return u;
}

CategoryAlgebra category_algebra(CategoryPtr c, const Field& f) {
  auto issues = structure_issues(*c, 1);
  if (!issues.empty()) throw StructuralError("not a category: " + issues[0].detail);
  return CategoryAlgebra{std::move(c), f};
}

std::vector<std::string> functoriality_issues(const CatRep& r, std::size_t limit) {
  std::vector<std::string> out;
  const auto& c = *r.category;
  auto report = [&](std::string s) {
    if (out.size() < limit) out.push_back(std::move(s));
  };
  if (r.dims.size() != c.object_count()) {
    report("expected " + std::to_string(c.object_count()) + " dimensions");
    return out;
  }
  if (r.mats.size() != c.morphism_count()) {
    report("expected " + std::to_string(c.morphism_count()) + " matrices");
    return out;
  }
  bool shapes_ok = true;
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    const auto& info = c.morphism(m);
    if (r.mats[m].rows != r.dims[info.tgt] || r.mats[m].cols != r.dims[info.src]) {
      report("matrix of " + info.name + " has shape " + std::to_string(r.mats[m].rows) + "x" +
             std::to_string(r.mats[m].cols));
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (r.mats[c.identity(x)] != Matrix::identity(r.dims[x]))
      report("identity of " + c.object_name(x) + " is not the identity matrix");
  for (std::size_t g = 0; g < c.morphism_count() && out.size() < limit; ++g)
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      const auto gf = c.compose(g, f);
      if (gf < 0) continue;
      if (mat_mul(r.field, r.mats[g], r.mats[f]) != r.mats[static_cast<std::size_t>(gf)])
        report("R(" + c.morphism(g).name + ") R(" + c.morphism(f).name + ") != R(" +
               c.morphism(static_cast<std::size_t>(gf)).name + ")");
    }
  return out;
}

CatRep make_rep(CategoryPtr c, const Field& f, std::vector<std::size_t> dims, std::vector<Matrix> mats) {
  CatRep r{std::move(c), f, std::move(dims), std::move(mats)};
  auto issues = functoriality_issues(r, 1);
  if (!issues.empty()) throw StructuralError("not a representation: " + issues[0]);
  return r;
}

CatRep rep_from_generators(CategoryPtr c, const Field& f, std::vector<std::size_t> dims,
                           const std::map<std::size_t, Matrix>& given) {
  const auto n = c->morphism_count();
  if (dims.size() != c->object_count()) throw InputError("one dimension per object expected");
  std::vector<std::optional<Matrix>> mats(n);
  std::vector<std::size_t> known;
  auto assign = [&](std::size_t m, Matrix a) {
    if (mats[m]) {
      if (*mats[m] != a)
        throw StructuralError("matrices conflict on morphism " + c->morphism(m).name);
      return;
    }
    mats[m] = std::move(a);
    known.push_back(m);
  };
  for (std::size_t x = 0; x < c->object_count(); ++x) assign(c->identity(x), Matrix::identity(dims[x]));
  for (const auto& [m, a] : given) {
    if (m >= n) throw InputError("morphism index out of range");
    const auto& info = c->morphism(m);
    if (a.rows != dims[info.tgt] || a.cols != dims[info.src])
      throw InputError("matrix of " + info.name + " has the wrong shape");
    assign(m, a);
  }
  // Close under composition; every new composite is checked against later derivations.
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto a = known[i], b = known[j];
      if (auto ab = c->compose(a, b); ab >= 0) assign(static_cast<std::size_t>(ab), mat_mul(f, *mats[a], *mats[b]));
      if (auto ba = c->compose(b, a); ba >= 0) assign(static_cast<std::size_t>(ba), mat_mul(f, *mats[b], *mats[a]));
    }
  }
  std::vector<Matrix> out;
  for (std::size_t m = 0; m < n; ++m) {
    if (!mats[m]) throw InputError("morphism " + c->morphism(m).name + " is not generated by the given matrices");
    out.push_back(std::move(*mats[m]));
  }
  return make_rep(std::move(c), f, std::move(dims), std::move(out));
}

CatRep zero_rep(CategoryPtr c, const Field& f) {
  std::vector<Matrix> mats(c->morphism_count(), Matrix(0, 0));
  std::vector<std::size_t> dims(c->object_count(), 0);
  return CatRep{std::move(c), f, std::move(dims), std::move(mats)};
}

CatRep direct_sum(const CatRep& a, const CatRep& b) {
  if (a.category != b.category || a.field != b.field) throw InputError("direct sum of unrelated representations");
  CatRep out{a.category, a.field, a.dims, {}};
  for (std::size_t x = 0; x < a.dims.size(); ++x) out.dims[x] += b.dims[x];
  for (std::size_t m = 0; m < a.mats.size(); ++m) out.mats.push_back(direct_sum(a.mats[m], b.mats[m]));
  return out;
}

FqModule object_module(const CatRep& r, std::size_t x) {
  auto g = automorphism_group(*r.category, x);
  std::vector<Matrix> action;
  for (const auto& s : g->generators()) action.push_back(r.mats[static_cast<std::size_t>(g->label(*g->index_of(s)))]);
  return FqModule{r.field, std::move(g), r.dims[x], std::move(action)};
}

CatRep restrict_rep(const CatRep& r, const Embedding& d) {
  CatRep out{d.category, r.field, {}, {}};
  for (auto x : d.object_to_parent) out.dims.push_back(r.dims.at(x));
  for (auto m : d.to_parent) out.mats.push_back(r.mats.at(m));
  return out;
}

CatRep induce_rep(const CatRep& n, const Embedding& d, CategoryPtr c) {
  const auto& cc = *c;
  const auto& dc = *d.category;
  const auto& f = n.field;
  if (n.category != d.category && n.dims.size() != dc.object_count()) throw InputError("representation is not over the subcategory");
  std::vector<std::optional<std::size_t>> sub_object(cc.object_count());
  for (std::size_t u = 0; u < d.object_to_parent.size(); ++u) sub_object[d.object_to_parent[u]] = u;

  // Free space at z: one block N(u) per morphism a: parent(u) -> z.
  struct Space {
    std::vector<std::size_t> offset;  // per morphism of C, or npos
    std::size_t size = 0;
    Subspace relations;
    std::vector<std::size_t> free;  // non-pivot coordinates: the basis of the quotient
  };
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<Space> spaces;
  for (std::size_t z = 0; z < cc.object_count(); ++z) {
    std::vector<std::size_t> offset(cc.morphism_count(), npos);
    std::size_t size = 0;
    for (std::size_t a = 0; a < cc.morphism_count(); ++a) {
      const auto& info = cc.morphism(a);
      if (info.tgt != z || !sub_object[info.src]) continue;
      offset[a] = size;
      size += n.dims[*sub_object[info.src]];
    }
    spaces.push_back(Space{std::move(offset), size, Subspace(f, size), {}});
  }
  // Balancing relations (a d) (x) v - a (x) N(d) v.
  for (std::size_t a = 0; a < cc.morphism_count(); ++a) {
    const auto& info = cc.morphism(a);
    if (!sub_object[info.src]) continue;
    auto& sp = spaces[info.tgt];
    const auto u = *sub_object[info.src];
    for (std::size_t dm = 0; dm < dc.morphism_count(); ++dm) {
      if (dc.morphism(dm).tgt != u) continue;
      const auto t = dc.morphism(dm).src;
      const auto ad = cc.compose_checked(a, d.to_parent[dm]);
      const auto& nd = n.mats[dm];
      for (std::size_t j = 0; j < n.dims[t]; ++j) {
        Vec rel(sp.size, 0);
        rel[sp.offset[ad] + j] = 1;
        for (std::size_t i = 0; i < n.dims[u]; ++i) rel[sp.offset[a] + i] = f.sub(rel[sp.offset[a] + i], nd(i, j));
        sp.relations.add(rel);
      }
    }
  }
  for (auto& sp : spaces) {
    const auto& piv = sp.relations.pivots();
    for (std::size_t k = 0; k < sp.size; ++k)
      if (!std::binary_search(piv.begin(), piv.end(), k)) sp.free.push_back(k);
  }
  CatRep out{std::move(c), f, {}, {}};
  for (const auto& sp : spaces) out.dims.push_back(sp.free.size());
  for (std::size_t m = 0; m < cc.morphism_count(); ++m) {
    const auto& info = cc.morphism(m);
    const auto& from = spaces[info.src];
    const auto& to = spaces[info.tgt];
    Matrix mat(to.free.size(), from.free.size());
    // Locate the block (a, i) of each free coordinate of the source space.
    for (std::size_t col = 0; col < from.free.size(); ++col) {
      const auto k = from.free[col];
      std::size_t a = 0;
      while (from.offset[a] == npos || k < from.offset[a] ||
             k >= from.offset[a] + n.dims[*sub_object[cc.morphism(a).src]])
        ++a;
      const auto i = k - from.offset[a];
      const auto ma = cc.compose_checked(m, a);
      Vec v(to.size, 0);
      v[to.offset[ma] + i] = 1;
      v = to.relations.reduce(v);
      for (std::size_t row = 0; row < to.free.size(); ++row) mat(row, col) = v[to.free[row]];
    }
    out.mats.push_back(std::move(mat));
  }
  auto issues = functoriality_issues(out, 1);
  if (!issues.empty()) throw ConsistencyError("induced representation is not functorial: " + issues[0]);
  return out;
}

TwoObjectShape two_object_shape(const FiniteCategory& c) {
  if (c.object_count() != 2) throw PreconditionError("expected a category with two objects");
  TwoObjectShape s;
  const bool forward = !c.hom(0, 1).empty(), backward = !c.hom(1, 0).empty();
  if (forward == backward) throw PreconditionError("expected morphisms in exactly one direction between the objects");
  s.x = forward ? 0 : 1;
  s.y = 1 - s.x;
  s.hom = hom_biset(c, s.x, s.y);
  if (s.hom.biset.orbit_count() != 1) throw PreconditionError("C(x, y) has more than one two-sided orbit");
  s.alpha = s.hom.biset.orbit_representatives()[0];
  return s;
}

namespace {

// Matrix of element idx of grp in a module whose group has the same elements.
Matrix matrix_at(const FqModule& m, const GroupPtr& grp, std::size_t idx) {
  if (m.group == grp) return element_matrix(m, idx);
  auto j = m.group->index_of(grp->element(idx));
  if (!j) throw InputError("module is not over the expected group");
  return element_matrix(m, *j);
}

Subspace column_space(const Field& f, const Matrix& a) {
  Subspace s(f, a.rows);
  for (std::size_t c = 0; c < a.cols; ++c) s.add(a.column(c));
  return s;
}

Subspace kernel(const Field& f, const Matrix& a) {
  Subspace s(f, a.cols);
  auto ns = nullspace(f, a);
  for (std::size_t r = 0; r < ns.rows; ++r) s.add(ns.row(r));
  return s;
}

}  // namespace

bool rep_valid(const TwoObjectRepWitness& w, const Biset& b, std::uint32_t alpha) {
  const auto& f = w.v.field;
  if (w.phi.rows != w.w.dim || w.phi.cols != w.v.dim) throw InputError("connecting map has the wrong shape");
  const auto& g = b.right_group();
  const auto& h = b.left_group();
  auto chain = stabilizer_chain(b, alpha);
  auto vperp = kernel(f, w.phi);
  auto wtop = column_space(f, w.phi);
  for (auto gi : chain.g1.generators()) {
    auto rv = matrix_at(w.v, g, gi);
    for (const auto& v : vperp.basis())
      if (!vperp.contains(apply(f, rv, v))) return false;
  }
  for (auto hi : chain.h1.generators()) {
    auto rw = matrix_at(w.w, h, hi);
    for (const auto& x : wtop.basis())
      if (!wtop.contains(apply(f, rw, x))) return false;
  }
  for (auto gi : chain.g0.generators())
    if (mat_mul(f, w.phi, matrix_at(w.v, g, gi)) != w.phi) return false;
  for (auto hi : chain.h0.generators()) {
    auto rw = matrix_at(w.w, h, hi);
    for (const auto& x : wtop.basis())
      if (apply(f, rw, x) != x) return false;
  }
  for (auto gi : chain.g1.generators()) {
    const auto hi = match_right_to_left(b, alpha, gi);
    if (mat_mul(f, w.phi, matrix_at(w.v, g, gi)) != mat_mul(f, matrix_at(w.w, h, hi), w.phi)) return false;
  }
  return true;
}

std::vector<Matrix> valid_connecting_maps(const FqModule& v, const FqModule& w, const Biset& b, std::uint32_t alpha) {
  const auto& g = b.right_group();
  const auto& h = b.left_group();
  auto chain = stabilizer_chain(b, alpha);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (auto gi : chain.g1.generators())
    pairs.emplace_back(matrix_at(v, g, gi), matrix_at(w, h, match_right_to_left(b, alpha, gi)));
  for (auto gi : chain.g0.generators()) pairs.emplace_back(matrix_at(v, g, gi), Matrix::identity(w.dim));
  for (auto hi : chain.h0.generators()) pairs.emplace_back(Matrix::identity(v.dim), matrix_at(w, h, hi));
  return intertwiner_space(v.field, v.dim, w.dim, pairs).basis;
}

CatRep rep_from_witness(const TwoObjectRepWitness& w, CategoryPtr c) {
  auto shape = two_object_shape(*c);
  const auto& b = shape.hom.biset;
  if (w.alpha >= b.size()) throw InputError("witness point out of range");
  if (!rep_valid(w, b, w.alpha)) throw InputError("connecting map does not define a representation");
  const auto& f = w.v.field;
  const auto& g = shape.hom.g;
  const auto& h = shape.hom.h;
  std::vector<Matrix> rv, rw;
  for (std::size_t i = 0; i < g->order(); ++i) rv.push_back(matrix_at(w.v, g, i));
  for (std::size_t i = 0; i < h->order(); ++i) rw.push_back(matrix_at(w.w, h, i));
  std::vector<std::size_t> dims(2);
  dims[shape.x] = w.v.dim;
  dims[shape.y] = w.w.dim;
  std::vector<Matrix> mats(c->morphism_count());
  for (std::size_t i = 0; i < g->order(); ++i) mats[static_cast<std::size_t>(g->label(i))] = rv[i];
  for (std::size_t i = 0; i < h->order(); ++i) mats[static_cast<std::size_t>(h->label(i))] = rw[i];
  std::vector<bool> done(b.size(), false);
  for (std::size_t gi = 0; gi < g->order(); ++gi) {
    const auto p = b.act_right(w.alpha, gi);
    auto phig = mat_mul(f, w.phi, rv[gi]);
    for (std::size_t hi = 0; hi < h->order(); ++hi) {
      const auto q = b.act_left(hi, p);
      if (done[q]) continue;
      done[q] = true;
      mats[shape.hom.points[q]] = mat_mul(f, rw[hi], phig);
    }
  }
  return make_rep(std::move(c), f, std::move(dims), std::move(mats));
}

TwoObjectRepWitness witness_from_rep(const CatRep& r) {
  auto shape = two_object_shape(*r.category);
  return TwoObjectRepWitness{object_module(r, shape.x), object_module(r, shape.y),
                             r.mats[shape.hom.points[shape.alpha]], shape.alpha};
}

TwoObjectRepWitness induce_two_object_fastpath(const TwoObjectRepWitness& w, const Embedding& d,
                                               const FiniteCategory& c) {
  auto cs = two_object_shape(c);
  auto ds = two_object_shape(*d.category);
  if (d.object_to_parent[ds.x] != cs.x || d.object_to_parent[ds.y] != cs.y)
    throw PreconditionError("subcategory objects do not match");
  const auto& b = cs.hom.biset;
  const auto& g = cs.hom.g;
  const auto& h = cs.hom.h;
  if (!b.left_transitive()) throw PreconditionError("C(y, y) does not act transitively on C(x, y)");
  const auto alpha_d = ds.hom.points[w.alpha];
  const auto alpha = static_cast<std::uint32_t>(c.position_in_hom(d.to_parent[alpha_d]));

  auto parent_subgroup = [&](const GroupPtr& parent, const HomBiset& dh, bool source) {
    std::vector<std::size_t> elems;
    const auto& dg = source ? dh.g : dh.h;
    for (std::size_t i = 0; i < dg->order(); ++i)
      elems.push_back(element_of_morphism(*parent, d.to_parent[static_cast<std::size_t>(dg->label(i))]));
    std::sort(elems.begin(), elems.end());
    return Subgroup(parent, elems);
  };
  auto gsub = parent_subgroup(g, ds.hom, true);
  auto hsub = parent_subgroup(h, ds.hom, false);

  // Stab_H(alpha G') must lie in H'.
  std::vector<bool> in_orbit(b.size(), false);
  for (auto gi : gsub.elements()) in_orbit[b.act_right(alpha, gi)] = true;
  for (std::size_t hi = 0; hi < h->order(); ++hi)
    if (in_orbit[b.act_left(hi, alpha)] && !hsub.contains(hi))
      throw PreconditionError("Stab_H(alpha G') is not contained in H'");

  // Move the modules from D's automorphism groups onto the subgroups of C's.
  auto move = [&](const FqModule& m, const GroupPtr& dgroup, const Subgroup& sub) {
    auto target = sub.as_group();
    const auto& parent = *sub.parent();
    return pullback(m, target, [&](std::size_t i) {
      const auto cid = parent.label(*parent.index_of(target->element(i)));
      auto did = std::find(d.to_parent.begin(), d.to_parent.end(), static_cast<std::size_t>(cid)) - d.to_parent.begin();
      const auto e = element_of_morphism(*dgroup, static_cast<std::size_t>(did));
      if (m.group == dgroup) return e;
      auto j = m.group->index_of(dgroup->element(e));
      if (!j) throw InputError("witness module is not over the subcategory's automorphism group");
      return *j;
    });
  };
  auto v = move(w.v, ds.hom.g, gsub);
  auto wm = move(w.w, ds.hom.h, hsub);
  TwoObjectRepWitness out{induce(v, gsub), induce(wm, hsub), Matrix(), alpha};

  const auto& f = w.v.field;
  auto greps = left_coset_reps(gsub);
  auto hreps = left_coset_reps(hsub);
  std::vector<std::size_t> hcoset(h->order());
  for (std::size_t j = 0; j < hreps.size(); ++j)
    for (auto y : hsub.elements()) hcoset[h->mul(hreps[j], y)] = j;
  const auto dv = w.v.dim, dw = w.w.dim;
  out.phi = Matrix(hreps.size() * dw, greps.size() * dv);
  for (std::size_t i = 0; i < greps.size(); ++i) {
    const auto target = b.act_right(alpha, greps[i]);
    std::size_t hi = 0;
    while (b.act_left(hi, alpha) != target) ++hi;  // h_i alpha = alpha t_i
    const auto j = hcoset[hi];
    const auto y = h->mul(h->inv(hreps[j]), hi);
    const auto local = *wm.group->index_of(h->element(y));
    set_block(out.phi, j * dw, i * dv, mat_mul(f, element_matrix(wm, local), w.phi));
  }
  return out;
}

CatHomSpace catrep_hom_space(const CatRep& r1, const CatRep& r2) {
  if (r1.category != r2.category && r1.dims.size() != r2.dims.size()) throw InputError("representations of different categories");
  const auto& c = *r1.category;
  const auto& f = r1.field;
  std::vector<std::size_t> offset(c.object_count());
  std::size_t unknowns = 0;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    offset[x] = unknowns;
    unknowns += r1.dims[x] * r2.dims[x];
  }
  // eta_x(i, j) is unknown offset[x] + i * r1.dims[x] + j.
  auto var = [&](std::size_t x, std::size_t i, std::size_t j) { return offset[x] + i * r1.dims[x] + j; };
  Subspace constraints(f, unknowns);
  for (std::size_t m = 0; m < c.morphism_count() && constraints.dim() < unknowns; ++m) {
    if (c.is_identity(m)) continue;
    const auto x = c.morphism(m).src, y = c.morphism(m).tgt;
    const auto& a1 = r1.mats[m];
    const auto& a2 = r2.mats[m];
    // (eta_y R1(m) - R2(m) eta_x)(i, j) = 0.
    for (std::size_t i = 0; i < r2.dims[y]; ++i)
      for (std::size_t j = 0; j < r1.dims[x]; ++j) {
        Vec row(unknowns, 0);
        for (std::size_t k = 0; k < r1.dims[y]; ++k) row[var(y, i, k)] = f.add(row[var(y, i, k)], a1(k, j));
        for (std::size_t k = 0; k < r2.dims[x]; ++k) row[var(x, k, j)] = f.sub(row[var(x, k, j)], a2(i, k));
        constraints.add(row);
      }
  }
  auto ns = nullspace(f, constraints.dim() ? constraints.as_matrix() : Matrix(0, unknowns));
  CatHomSpace out;
  out.dim = ns.rows;
  for (std::size_t r = 0; r < ns.rows; ++r) {
    std::vector<Matrix> eta;
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      Matrix e(r2.dims[x], r1.dims[x]);
      for (std::size_t i = 0; i < e.rows; ++i)
        for (std::size_t j = 0; j < e.cols; ++j) e(i, j) = ns(r, var(x, i, j));
      eta.push_back(std::move(e));
    }
    out.basis.push_back(std::move(eta));
  }
  return out;
}

std::optional<std::vector<Matrix>> find_catrep_isomorphism(const CatRep& r1, const CatRep& r2, std::uint64_t seed) {
  if (r1.dims != r2.dims) return std::nullopt;
  auto hom = catrep_hom_space(r1, r2);
  const auto& f = r1.field;
  const auto objects = r1.dims.size();
  auto invertible = [&](const std::vector<Matrix>& eta) {
    for (const auto& e : eta)
      if (!is_invertible(f, e)) return false;
    return true;
  };
  auto combine = [&](const std::vector<Fq>& coef) {
    std::vector<Matrix> eta;
    for (std::size_t x = 0; x < objects; ++x) eta.emplace_back(r2.dims[x], r1.dims[x]);
    for (std::size_t k = 0; k < coef.size(); ++k)
      if (coef[k] != 0)
        for (std::size_t x = 0; x < objects; ++x) eta[x] = mat_add(f, eta[x], mat_scale(f, coef[k], hom.basis[k][x]));
    return eta;
  };
  std::vector<Fq> coef(hom.dim, 0);
  if (hom.dim == 0) {
    auto eta = combine(coef);
    return invertible(eta) ? std::optional(eta) : std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& v : coef) v = static_cast<Fq>(rng() % f.order());
    auto eta = combine(coef);
    if (invertible(eta)) return eta;
  }
  // Exhaustive fallback over small hom spaces.
  double total = 1;
  for (std::size_t i = 0; i < hom.dim; ++i) total *= f.order();
  if (total > 65536) return std::nullopt;
  std::fill(coef.begin(), coef.end(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == f.order()) coef[k++] = 0;
    if (k == coef.size()) break;
    auto eta = combine(coef);
    if (invertible(eta)) return eta;
  }
  return std::nullopt;
}

bool catrep_is_isomorphic(const CatRep& r1, const CatRep& r2, std::uint64_t seed) {
  return find_catrep_isomorphism(r1, r2, seed).has_value();
}

}  // namespace eirep
