#include <algorithm>
#include <numeric>
#include <tuple>

#include "eirep/modrep.hpp"
#include "eirep/poly.hpp"

namespace eirep {

namespace {

constexpr int kMeataxeAttempts = 200;
constexpr std::size_t kPoolSize = 16;

Subspace annihilator(const Field& f, const Subspace& dual_sub, std::size_t n) {
  auto ns = nullspace(f, dual_sub.as_matrix());
  Subspace out(f, n);
  for (std::size_t r = 0; r < ns.rows; ++r) out.add(ns.row(r));
  return out;
}

}  // namespace

std::optional<Subspace> proper_submodule(const FqModule& m, std::mt19937_64& rng) {
  const auto& f = m.field;
  const auto n = m.dim;
  if (n <= 1) return std::nullopt;
  std::vector<Matrix> transposed;
  for (const auto& a : m.action) transposed.push_back(transpose(a));
  std::vector<Matrix> pool{Matrix::identity(n)};
  for (const auto& a : m.action) pool.push_back(a);
  for (int attempt = 0; attempt < kMeataxeAttempts; ++attempt) {
    auto word = mat_mul(f, pool[rng() % pool.size()], pool[rng() % pool.size()]);
    if (pool.size() < kPoolSize)
      pool.push_back(std::move(word));
    else
      pool[1 + rng() % (pool.size() - 1)] = std::move(word);
    Matrix a(n, n);
    for (const auto& w : pool) {
      const auto c = static_cast<Fq>(rng() % f.order());
      if (c != 0) a = mat_add(f, a, mat_scale(f, c, w));
    }
    auto factors = poly::irreducible_factors(f, poly::charpoly(f, a), rng);
    for (const auto& p : factors) {
      auto pa = poly::evaluate(f, p, a);
      auto kernel = nullspace(f, pa);
      auto s = spin(f, m.action, {kernel.row(0)});
      if (s.dim() < n) return s;
      if (kernel.rows != static_cast<std::size_t>(poly::degree(p))) continue;
      // Every submodule meeting the kernel is everything; look for one in the dual.
      auto dual_kernel = nullspace(f, transpose(pa));
      auto t = spin(f, transposed, {dual_kernel.row(0)});
      if (t.dim() < n) return annihilator(f, t, n);
      return std::nullopt;
    }
  }
  throw ResourceError("Meataxe found neither a submodule nor an irreducibility certificate in " +
                      std::to_string(kMeataxeAttempts) + " attempts");
}

bool is_irreducible(const FqModule& m, std::uint64_t seed) {
  if (m.dim == 0) return false;
  std::mt19937_64 rng(seed);
  return !proper_submodule(m, rng).has_value();
}

std::vector<FqModule> chop(const FqModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FqModule> out;
  std::vector<FqModule> stack{m};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim == 0) continue;
    auto sub = proper_submodule(cur, rng);
    if (!sub) {
      out.push_back(std::move(cur));
      continue;
    }
    // Quotient is pushed first so that factors come out bottom-up.
    stack.push_back(quotient(cur, *sub));
    stack.push_back(submodule(cur, *sub));
  }
  return out;
}

namespace {

std::vector<Fq> generator_traces(const FqModule& m) {
  std::vector<Fq> t;
  for (const auto& a : m.action) {
    Fq acc = 0;
    for (std::size_t i = 0; i < a.rows; ++i) acc = m.field.add(acc, a(i, i));
    t.push_back(acc);
  }
  return t;
}

}  // namespace

std::optional<std::size_t> identify_simple(const FqModule& s, const std::vector<FqModule>& simples) {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i].dim == s.dim && is_isomorphic(s, simples[i])) return i;
  return std::nullopt;
}

std::vector<FqModule> simple_modules(const Field& f, GroupPtr g, std::uint64_t seed) {
  auto factors = chop(regular_module(f, g), seed);
  std::vector<FqModule> simples;
  for (auto& s : factors)
    if (!identify_simple(s, simples)) simples.push_back(std::move(s));
  for (const auto& s : simples) {
    const auto e = hom_space(s, s).dim;
    if (e != 1) throw NonSplitFactorError(s, e);
  }
  std::vector<std::size_t> order(simples.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::tuple<std::size_t, bool, std::vector<Fq>>> keys;
  for (const auto& s : simples) keys.emplace_back(s.dim, !is_trivial_action(s), generator_traces(s));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<FqModule> sorted;
  for (auto i : order) sorted.push_back(std::move(simples[i]));
  return sorted;
}

std::vector<std::size_t> composition_multiplicities(const FqModule& m, const std::vector<FqModule>& simples,
                                                    std::uint64_t seed) {
  std::vector<std::size_t> mult(simples.size(), 0);
  for (const auto& s : chop(m, seed)) {
    auto i = identify_simple(s, simples);
    if (!i) throw InputError("simple module list is incomplete: unlisted factor of dimension " + std::to_string(s.dim));
    ++mult[*i];
  }
  return mult;
}

Subspace radical(const FqModule& m, const std::vector<FqModule>& simples) {
  std::vector<Vec> rows;
  for (const auto& s : simples)
    for (const auto& phi : hom_space(m, s).basis)
      for (std::size_t r = 0; r < phi.rows; ++r) rows.push_back(phi.row(r));
  Subspace rad(m.field, m.dim);
  auto ns = nullspace(m.field, rows.empty() ? Matrix(0, m.dim) : Matrix::from_rows(rows, m.dim));
  for (std::size_t r = 0; r < ns.rows; ++r) rad.add(ns.row(r));
  return rad;
}

namespace {

void check_simples(const FqModule& m, const std::vector<FqModule>& simples, std::uint64_t seed) {
  for (const auto& s : simples) {
    if (s.field != m.field) throw InputError("simple module over another field");
    if (hom_space(s, s).dim != 1) throw InputError("simple module without scalar endomorphisms");
  }
  composition_multiplicities(m, simples, seed);
}

}  // namespace

TopSocle top_and_socle_multiplicities(const FqModule& m, const std::vector<FqModule>& simples, std::uint64_t seed) {
  check_simples(m, simples, seed);
  TopSocle out;
  std::size_t top_dim = 0;
  for (const auto& s : simples) {
    out.top.push_back(hom_space(m, s).dim);
    out.socle.push_back(hom_space(s, m).dim);
    top_dim += out.top.back() * s.dim;
  }
  out.radical_dim = radical(m, simples).dim();
  if (top_dim + out.radical_dim != m.dim)
    throw ConsistencyError("top dimension " + std::to_string(top_dim) + " and radical dimension " +
                           std::to_string(out.radical_dim) + " do not add up to " + std::to_string(m.dim));
  return out;
}

std::vector<std::vector<std::size_t>> radical_series(const FqModule& m, const std::vector<FqModule>& simples,
                                                     std::uint64_t seed) {
  check_simples(m, simples, seed);
  std::vector<std::vector<std::size_t>> layers;
  FqModule cur = m;
  while (cur.dim > 0) {
    std::vector<std::size_t> layer;
    for (const auto& s : simples) layer.push_back(hom_space(cur, s).dim);
    auto rad = radical(cur, simples);
    if (rad.dim() == cur.dim) throw ConsistencyError("radical series does not descend");
    layers.push_back(std::move(layer));
    cur = submodule(cur, rad);
  }
  return layers;
}

}  // namespace eirep
