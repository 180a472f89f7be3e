#include "eirep/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eirep/error.hpp"

namespace eirep {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InputError("permutation degree mismatch");
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

GroupPtr FiniteGroup::generated_by(std::size_t degree, std::vector<Perm> gens) {
  if (degree == 0) degree = 1;
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) + " differs from " +
                       std::to_string(degree));
  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->degree_ = degree;
  grp->gens_ = std::move(gens);
  grp->enumerate();
  return grp;
}

void FiniteGroup::enumerate() {
  elements_.push_back(Perm::identity(degree_));
  index_[elements_[0]] = 0;
  parent_.push_back(0);
  parent_gen_.push_back(0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      Perm next = elements_[k] * gens_[s];
      if (index_.count(next)) continue;
      if (elements_.size() >= kMaxOrder) throw ResourceError("group order exceeds limit");
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
      parent_.push_back(k);
      parent_gen_.push_back(s);
    }
  }
  const std::size_t n = elements_.size();
  if (n <= 1024) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint32_t>(index_.at(elements_[a] * elements_[b]));
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_.at(elements_[a].inverse());
  orders_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
}

GroupPtr FiniteGroup::trivial() { return generated_by(1, {}); }

GroupPtr FiniteGroup::cyclic(std::size_t n) {
  if (n <= 1) return trivial();
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  return generated_by(n, {Perm(im)});
}

GroupPtr FiniteGroup::symmetric(std::size_t n) {
  if (n <= 1) return trivial();
  std::vector<std::uint32_t> t(n), c(n);
  std::iota(t.begin(), t.end(), 0u);
  std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
  if (n == 2) return generated_by(n, {Perm(t)});
  return generated_by(n, {Perm(c), Perm(t)});
}

GroupPtr FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = g(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + i);
    gens.emplace_back(im);
  }
  for (const auto& g : b.generators()) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + g(static_cast<std::uint32_t>(i)));
    gens.emplace_back(im);
  }
  return generated_by(da + db, std::move(gens));
}

GroupPtr FiniteGroup::with_labels(std::vector<std::int64_t> labels) const {
  if (labels.size() != order()) throw InputError("label count differs from group order");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(*this));
  g->label_index_.clear();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!g->label_index_.emplace(labels[i], i).second) throw InputError("duplicate element label");
  g->labels_ = std::move(labels);
  return g;
}

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGroup::index_of_label(std::int64_t label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::pow(std::size_t a, std::size_t k) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < k % orders_[a]; ++i) r = mul(r, a);
  return r;
}

std::vector<std::size_t> FiniteGroup::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < gens_.size(); ++a)
    for (std::size_t b = a + 1; b < gens_.size(); ++b)
      if (!(gens_[a] * gens_[b] == gens_[b] * gens_[a])) return false;
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

namespace {

std::vector<std::size_t> closure(const FiniteGroup& g, const std::vector<std::size_t>& seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out{0};
  in[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : seeds) {
      auto n = g.mul(out[k], s);
      if (!in[n]) {
        in[n] = true;
        out.push_back(n);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  member_.assign(parent_->order(), false);
  for (auto e : elems_) {
    if (e >= parent_->order()) throw InputError("subgroup element out of range");
    member_[e] = true;
  }
  if (elems_.empty() || !member_[0]) throw InputError("subgroup must contain the identity");
  // Greedy generating set; also verifies closure.
  std::vector<bool> reached(parent_->order(), false);
  std::vector<std::size_t> span{0};
  reached[0] = true;
  for (auto e : elems_) {
    if (reached[e]) continue;
    gens_.push_back(e);
    span = closure(*parent_, gens_);
    for (auto s : span) {
      if (!member_[s]) throw InputError("subgroup element set is not closed");
      reached[s] = true;
    }
  }
  if (span.size() != elems_.size()) throw InputError("subgroup element set is not closed");
}

GroupPtr Subgroup::as_group() const {
  std::vector<Perm> gens;
  for (auto g : gens_) gens.push_back(parent_->element(g));
  auto grp = FiniteGroup::generated_by(parent_->degree(), gens);
  if (parent_->has_labels()) {
    std::vector<std::int64_t> labels(grp->order());
    for (std::size_t i = 0; i < grp->order(); ++i)
      labels[i] = parent_->label(*parent_->index_of(grp->element(i)));
    grp = grp->with_labels(std::move(labels));
  }
  return grp;
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<std::size_t> all(g->order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& seeds) {
  return Subgroup(g, closure(*g, seeds));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<std::size_t> out;
  for (auto e : a.elements())
    if (b.contains(e)) out.push_back(e);
  return Subgroup(a.parent(), std::move(out));
}

bool is_normal(const Subgroup& sub) {
  const auto& g = *sub.parent();
  for (const auto& s : g.generators()) {
    auto si = *g.index_of(s);
    for (auto h : sub.generators())
      if (!sub.contains(g.mul(g.mul(si, h), g.inv(si)))) return false;
  }
  return true;
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  for (auto e : a.generators())
    if (!b.contains(e)) return false;
  return true;
}

std::size_t p_part(std::size_t n, std::uint32_t p) {
  if (p < 2) return 1;
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_p_power(std::size_t n, std::uint32_t p) {
  if (n == 0) return false;
  return p >= 2 && p_part(n, p) == n;
}

bool is_p_group(const FiniteGroup& g, std::uint32_t p) { return is_p_power(g.order(), p); }

std::vector<std::size_t> p_elements(const FiniteGroup& g, std::uint32_t p) {
  std::vector<std::size_t> out{0};
  if (p < 2) return out;
  for (std::size_t i = 1; i < g.order(); ++i)
    if (is_p_power(g.element_order(i), p)) out.push_back(i);
  return out;
}

bool sylow_p_cyclic(const FiniteGroup& g, std::uint32_t p) {
  if (p < 2) return true;
  const auto target = p_part(g.order(), p);
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_order(i) == target) return true;
  return false;
}

Subgroup o_p_prime(const GroupPtr& g, std::uint32_t p) { return subgroup_generated(g, p_elements(*g, p)); }

std::optional<Subgroup> normal_sylow(const GroupPtr& g, std::uint32_t p) {
  if (p < 2) return std::nullopt;
  const auto sylow_order = p_part(g->order(), p);
  if (sylow_order == 1) return std::nullopt;
  auto all = p_elements(*g, p);
  if (all.size() != sylow_order) return std::nullopt;
  return Subgroup(g, all);
}

std::size_t double_coset_count(const Subgroup& a, const Subgroup& b) {
  const auto& g = *a.parent();
  if (!same_group(g, *b.parent())) throw InputError("double cosets need subgroups of one group");
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (auto u : a.elements())
      for (auto v : b.elements()) seen[g.mul(g.mul(u, x), v)] = true;
  }
  return count;
}

std::vector<std::size_t> left_coset_reps(const Subgroup& sub) {
  const auto& g = *sub.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto s : sub.elements()) seen[g.mul(x, s)] = true;
  }
  return reps;
}

}  // namespace eirep
