#include "eirep/modrep.hpp"

#include <algorithm>

#include "eirep/poly.hpp"

namespace eirep {

NonSplitFactorError::NonSplitFactorError(FqModule factor, std::size_t endo_dim)
    : FieldNotSplittingError("composition factor of dimension " + std::to_string(factor.dim) +
                             " has endomorphism algebra of dimension " + std::to_string(endo_dim) + " over " +
                             factor.field.describe()),
      factor_(std::move(factor)),
      endo_dim_(endo_dim) {}

namespace {

void check_compatible(const FqModule& a, const FqModule& b) {
  if (a.field != b.field) throw InputError("modules over different fields");
  if (a.group != b.group && !same_group(*a.group, *b.group)) throw InputError("modules over different groups");
}

}  // namespace

FqModule make_module(const Field& f, GroupPtr g, std::size_t dim, std::vector<Matrix> action) {
  if (action.size() != g->generators().size())
    throw InputError("module needs one matrix per group generator (" + std::to_string(g->generators().size()) +
                     "), got " + std::to_string(action.size()));
  for (const auto& a : action) {
    if (a.rows != dim || a.cols != dim) throw InputError("module matrix has wrong shape");
    for (auto v : a.data)
      if (v >= f.order()) throw InputError("matrix entry outside " + f.describe());
  }
  FqModule m{f, std::move(g), dim, std::move(action)};
  validate_module(m);
  return m;
}

Matrix element_matrix(const FqModule& m, std::size_t i) {
  Matrix r = Matrix::identity(m.dim);
  for (auto s : m.group->word(i)) r = mat_mul(m.field, r, m.action[s]);
  return r;
}

std::vector<Matrix> element_matrices(const FqModule& m) {
  const auto& g = *m.group;
  std::vector<Matrix> out(g.order());
  out[0] = Matrix::identity(m.dim);
  for (std::size_t i = 1; i < g.order(); ++i)
    out[i] = mat_mul(m.field, out[g.word_parent(i)], m.action[g.word_generator(i)]);
  return out;
}

void validate_module(const FqModule& m, std::uint64_t seed) {
  const auto& g = *m.group;
  const auto& gens = g.generators();
  if (g.order() <= 256) {
    auto mats = element_matrices(m);
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s)
        if (mat_mul(m.field, mats[i], m.action[s]) != mats[*g.index_of(g.element(i) * gens[s])])
          throw StructuralError("module matrices violate a group relation (element " + std::to_string(i) +
                                ", generator " + std::to_string(s) + ")");
    return;
  }
  for (const auto& a : m.action)
    if (!is_invertible(m.field, a)) throw StructuralError("module matrix is not invertible");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 64 && !gens.empty(); ++trial) {
    const auto len = 1 + rng() % 8;
    Perm p = Perm::identity(g.degree());
    Matrix a = Matrix::identity(m.dim);
    for (std::size_t k = 0; k < len; ++k) {
      const auto s = rng() % gens.size();
      p = p * gens[s];
      a = mat_mul(m.field, a, m.action[s]);
    }
    if (a != element_matrix(m, *g.index_of(p)))
      throw StructuralError("module matrices violate a group relation (sampled word)");
  }
}

FqModule trivial_module(const Field& f, GroupPtr g) {
  std::vector<Matrix> action(g->generators().size(), Matrix::identity(1));
  return FqModule{f, std::move(g), 1, std::move(action)};
}

FqModule permutation_module(const Field& f, const Subgroup& a) {
  const auto& g = a.parent();
  auto reps = left_coset_reps(a);
  std::vector<std::size_t> coset_of(g->order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (auto x : a.elements()) coset_of[g->mul(reps[c], x)] = c;
  std::vector<Matrix> action;
  for (const auto& s : g->generators()) {
    const auto si = *g->index_of(s);
    Matrix m(reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) m(coset_of[g->mul(si, reps[c])], c) = 1;
    action.push_back(std::move(m));
  }
  return FqModule{f, g, reps.size(), std::move(action)};
}

FqModule regular_module(const Field& f, GroupPtr g) { return permutation_module(f, trivial_subgroup(g)); }

FqModule permutation_action_module(const Field& f, GroupPtr g, std::size_t n, const std::vector<Perm>& gen_actions) {
  if (gen_actions.size() != g->generators().size()) throw InputError("one permutation per generator expected");
  std::vector<Matrix> action;
  for (const auto& p : gen_actions) {
    if (p.degree() != n) throw InputError("permutation degree mismatch");
    Matrix m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) m(p(i), i) = 1;
    action.push_back(std::move(m));
  }
  return make_module(f, std::move(g), n, std::move(action));
}

FqModule pullback(const FqModule& m, GroupPtr target, const std::function<std::size_t(std::size_t)>& to_source) {
  std::vector<Matrix> action;
  for (const auto& s : target->generators()) action.push_back(element_matrix(m, to_source(*target->index_of(s))));
  return FqModule{m.field, std::move(target), m.dim, std::move(action)};
}

FqModule transport_by_labels(const FqModule& m, GroupPtr target) {
  if (!m.group->has_labels() || !target->has_labels()) throw InputError("transport needs labelled groups");
  const auto& src = *m.group;
  const auto* tgt = target.get();
  return pullback(m, std::move(target), [&](std::size_t i) {
    auto j = src.index_of_label(tgt->label(i));
    if (!j) throw InputError("label " + std::to_string(tgt->label(i)) + " missing from source group");
    return *j;
  });
}

FqModule restrict(const FqModule& m, const Subgroup& a) {
  const auto& parent = *a.parent();
  const bool same = a.parent() == m.group;
  if (!same && parent.degree() != m.group->degree()) throw InputError("restriction to a subgroup of another group");
  auto sub = a.as_group();
  std::vector<Matrix> action;
  for (auto gi : a.generators()) {
    auto idx = same ? std::optional<std::size_t>(gi) : m.group->index_of(parent.element(gi));
    if (!idx) throw InputError("restriction to a subgroup of another group");
    action.push_back(element_matrix(m, *idx));
  }
  return FqModule{m.field, std::move(sub), m.dim, std::move(action)};
}

FqModule induce(const FqModule& m, const Subgroup& a) {
  const auto& g = a.parent();
  if (m.group->order() != a.order() || m.group->degree() != g->degree())
    throw InputError("induction: module group does not match the subgroup");
  auto mats = element_matrices(m);
  auto local = [&](std::size_t x) {
    auto j = m.group->index_of(g->element(x));
    if (!j) throw InputError("induction: module group does not match the subgroup");
    return *j;
  };
  auto reps = left_coset_reps(a);
  const auto n = reps.size();
  std::vector<std::size_t> coset_of(g->order());
  for (std::size_t c = 0; c < n; ++c)
    for (auto x : a.elements()) coset_of[g->mul(reps[c], x)] = c;
  const auto d = m.dim;
  std::vector<Matrix> action;
  for (const auto& s : g->generators()) {
    const auto si = *g->index_of(s);
    Matrix big(n * d, n * d);
    for (std::size_t i = 0; i < n; ++i) {
      const auto prod = g->mul(si, reps[i]);
      const auto j = coset_of[prod];
      const auto x = g->mul(g->inv(reps[j]), prod);  // s t_i = t_j x
      set_block(big, j * d, i * d, mats[local(x)]);
    }
    action.push_back(std::move(big));
  }
  return FqModule{m.field, g, n * d, std::move(action)};
}

FqModule conjugate(const FqModule& m, const Matrix& p) {
  auto inv = inverse(m.field, p);
  if (!inv) throw InputError("conjugating matrix is singular");
  FqModule out = m;
  for (auto& a : out.action) a = mat_mul(m.field, mat_mul(m.field, *inv, a), p);
  return out;
}

FqModule direct_sum(const FqModule& a, const FqModule& b) {
  check_compatible(a, b);
  FqModule out{a.field, a.group, a.dim + b.dim, {}};
  for (std::size_t s = 0; s < a.action.size(); ++s) out.action.push_back(direct_sum(a.action[s], b.action[s]));
  return out;
}

FqModule submodule(const FqModule& m, const Subspace& s) {
  FqModule out{m.field, m.group, s.dim(), {}};
  for (const auto& a : m.action) {
    Matrix sub(s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      auto w = apply(m.field, a, s.basis()[j]);
      if (!s.contains(w)) throw InputError("subspace is not invariant");
      auto c = s.coordinates(w);
      for (std::size_t i = 0; i < s.dim(); ++i) sub(i, j) = c[i];
    }
    out.action.push_back(std::move(sub));
  }
  return out;
}

FqModule quotient(const FqModule& m, const Subspace& s) {
  std::vector<std::size_t> free;
  const auto& piv = s.pivots();
  for (std::size_t c = 0; c < m.dim; ++c)
    if (!std::binary_search(piv.begin(), piv.end(), c)) free.push_back(c);
  FqModule out{m.field, m.group, free.size(), {}};
  for (const auto& a : m.action) {
    Matrix q(free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      auto w = s.reduce(a.column(free[j]));
      for (std::size_t i = 0; i < free.size(); ++i) q(i, j) = w[free[i]];
    }
    out.action.push_back(std::move(q));
  }
  return out;
}

bool is_trivial_action(const FqModule& m) {
  const auto id = Matrix::identity(m.dim);
  return std::all_of(m.action.begin(), m.action.end(), [&](const Matrix& a) { return a == id; });
}

HomSpace intertwiner_space(const Field& f, std::size_t dm, std::size_t dn,
                           const std::vector<std::pair<Matrix, Matrix>>& pairs) {
  const auto unknowns = dm * dn;
  // Solutions as vec(X) with index i * dm + j for X(i, j), refined one pair at a time.
  std::vector<Vec> basis;
  bool all = true;
  for (std::size_t s = 0; s < pairs.size() && (all || !basis.empty()); ++s) {
    const auto& a = pairs[s].first;
    const auto& b = pairs[s].second;
    if (a.rows != dm || a.cols != dm || b.rows != dn || b.cols != dn) throw InputError("intertwiner: shape mismatch");
    // Constraint (X a - b X)(i, j) = sum_k X(i, k) a(k, j) - sum_k b(i, k) X(k, j).
    auto constraint_of = [&](const Vec& x) {
      Vec out(unknowns, 0);
      for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
          Fq acc = 0;
          for (std::size_t k = 0; k < dm; ++k) acc = f.add(acc, f.mul(x[i * dm + k], a(k, j)));
          for (std::size_t k = 0; k < dn; ++k) acc = f.sub(acc, f.mul(b(i, k), x[k * dm + j]));
          out[i * dm + j] = acc;
        }
      return out;
    };
    if (all) {
      Matrix c(unknowns, unknowns);
      for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
          const auto row = i * dm + j;
          for (std::size_t k = 0; k < dm; ++k) c(row, i * dm + k) = f.add(c(row, i * dm + k), a(k, j));
          for (std::size_t k = 0; k < dn; ++k) c(row, k * dm + j) = f.sub(c(row, k * dm + j), b(i, k));
        }
      auto ns = nullspace(f, c);
      basis.clear();
      for (std::size_t r = 0; r < ns.rows; ++r) basis.push_back(ns.row(r));
      all = false;
      continue;
    }
    Matrix c(unknowns, basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      auto img = constraint_of(basis[col]);
      for (std::size_t r = 0; r < unknowns; ++r) c(r, col) = img[r];
    }
    auto combos = nullspace(f, c);
    std::vector<Vec> next;
    for (std::size_t r = 0; r < combos.rows; ++r) {
      Vec v(unknowns, 0);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto w = combos(r, col);
        if (w == 0) continue;
        for (std::size_t t = 0; t < unknowns; ++t) v[t] = f.add(v[t], f.mul(w, basis[col][t]));
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  if (all) {
    basis.clear();
    for (std::size_t t = 0; t < unknowns; ++t) {
      Vec v(unknowns, 0);
      v[t] = 1;
      basis.push_back(std::move(v));
    }
  }
  HomSpace out;
  out.dim = basis.size();
  for (const auto& v : basis) {
    Matrix x(dn, dm);
    x.data = v;
    out.basis.push_back(std::move(x));
  }
  return out;
}

HomSpace hom_space(const FqModule& m, const FqModule& n) {
  check_compatible(m, n);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t s = 0; s < m.action.size(); ++s) pairs.emplace_back(m.action[s], n.action[s]);
  return intertwiner_space(m.field, m.dim, n.dim, pairs);
}

std::optional<Matrix> find_isomorphism(const FqModule& m, const FqModule& n, std::uint64_t seed) {
  check_compatible(m, n);
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Matrix(0, 0);
  for (std::size_t s = 0; s < m.action.size(); ++s)
    if (poly::charpoly(m.field, m.action[s]) != poly::charpoly(n.field, n.action[s])) return std::nullopt;
  auto hom = hom_space(m, n);
  if (hom.dim == 0) return std::nullopt;
  const auto& f = m.field;
  auto combine = [&](const std::vector<Fq>& c) {
    Matrix x(n.dim, m.dim);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) x = mat_add(f, x, mat_scale(f, c[i], hom.basis[i]));
    return x;
  };
  for (const auto& b : hom.basis)
    if (is_invertible(f, b)) return b;
  std::mt19937_64 rng(seed);
  std::vector<Fq> c(hom.dim);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& v : c) v = static_cast<Fq>(rng() % f.order());
    auto x = combine(c);
    if (is_invertible(f, x)) return x;
  }
  // Exhaustive fallback over all combinations when the space is small.
  double total = 1;
  for (std::size_t i = 0; i < hom.dim; ++i) total *= f.order();
  if (total > 65536) return std::nullopt;
  std::fill(c.begin(), c.end(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == f.order()) c[k++] = 0;
    if (k == c.size()) break;
    auto x = combine(c);
    if (is_invertible(f, x)) return x;
  }
  return std::nullopt;
}

bool is_isomorphic(const FqModule& m, const FqModule& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

std::uint32_t splitting_prime(const std::vector<GroupPtr>& groups, std::uint32_t forbidden) {
  for (std::uint32_t l = 2; l < Field::kMaxOrder; ++l) {
    if (l == forbidden || !is_prime(l)) continue;
    bool ok = true;
    for (const auto& g : groups) {
      if (g->order() % l == 0 || (l - 1) % g->exponent() != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return l;
  }
  throw ResourceError("no splitting prime below " + std::to_string(Field::kMaxOrder));
}

}  // namespace eirep
