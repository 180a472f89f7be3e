#include "eirep/biset.hpp"

#include <algorithm>
#include <string>

#include "dsu.hpp"
#include "eirep/error.hpp"

namespace eirep {

namespace {

void check_carrier_perms(const std::vector<Perm>& perms, std::size_t expected, std::size_t size, const char* side) {
  if (perms.size() != expected)
    throw StructuralError(std::string(side) + " action: expected " + std::to_string(expected) +
                          " generator images, got " + std::to_string(perms.size()));
  for (const auto& p : perms)
    if (p.degree() != size) throw StructuralError(std::string(side) + " action: image has wrong carrier size");
}

}  // namespace

Biset Biset::from_generators(GroupPtr left, GroupPtr right, std::size_t size, const std::vector<Perm>& left_gens,
                             const std::vector<Perm>& right_gens) {
  check_carrier_perms(left_gens, left->generators().size(), size, "left");
  check_carrier_perms(right_gens, right->generators().size(), size, "right");
  Biset b;
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  b.size_ = size;
  const auto& H = *b.left_;
  const auto& G = *b.right_;

  b.left_table_.assign(H.order() * size, 0);
  for (std::uint32_t x = 0; x < size; ++x) b.left_table_[x] = x;
  for (std::size_t e = 1; e < H.order(); ++e) {
    const auto par = H.word_parent(e);
    const auto& s = left_gens[H.word_generator(e)];
    for (std::uint32_t x = 0; x < size; ++x) b.left_table_[e * size + x] = b.left_table_[par * size + s(x)];
  }
  for (std::size_t e = 0; e < H.order(); ++e)
    for (std::size_t s = 0; s < left_gens.size(); ++s) {
      const auto es = *H.index_of(H.element(e) * H.generators()[s]);
      for (std::uint32_t x = 0; x < size; ++x)
        if (b.left_table_[es * size + x] != b.left_table_[e * size + left_gens[s](x)])
          throw StructuralError("left action does not respect the group relations");
    }

  b.right_table_.assign(G.order() * size, 0);
  for (std::uint32_t x = 0; x < size; ++x) b.right_table_[x] = x;
  for (std::size_t e = 1; e < G.order(); ++e) {
    const auto par = G.word_parent(e);
    const auto& s = right_gens[G.word_generator(e)];
    for (std::uint32_t x = 0; x < size; ++x) b.right_table_[e * size + x] = s(b.right_table_[par * size + x]);
  }
  for (std::size_t e = 0; e < G.order(); ++e)
    for (std::size_t s = 0; s < right_gens.size(); ++s) {
      const auto es = *G.index_of(G.element(e) * G.generators()[s]);
      for (std::uint32_t x = 0; x < size; ++x)
        if (b.right_table_[es * size + x] != right_gens[s](b.right_table_[e * size + x]))
          throw StructuralError("right action does not respect the group relations");
    }

  for (const auto& l : left_gens)
    for (const auto& r : right_gens)
      for (std::uint32_t x = 0; x < size; ++x)
        if (l(r(x)) != r(l(x))) throw StructuralError("left and right actions do not commute");
  return b;
}

std::vector<std::size_t> Biset::orbit_ids() const {
  detail::Dsu dsu(size_);
  for (const auto& h : left_->generators()) {
    const auto hi = *left_->index_of(h);
    for (std::uint32_t x = 0; x < size_; ++x) dsu.unite(x, act_left(hi, x));
  }
  for (const auto& g : right_->generators()) {
    const auto gi = *right_->index_of(g);
    for (std::uint32_t x = 0; x < size_; ++x) dsu.unite(x, act_right(x, gi));
  }
  return dsu.class_ids();
}

std::size_t Biset::orbit_count() const {
  auto ids = orbit_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<std::uint32_t> Biset::orbit_representatives() const {
  auto ids = orbit_ids();
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < size_; ++x)
    if (ids[x] == reps.size()) reps.push_back(x);
  return reps;
}

Biset Biset::restricted_to(const std::vector<std::uint32_t>& points) const {
  std::vector<std::uint32_t> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> pos(size_, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<std::int64_t>(i);
  Biset r;
  r.left_ = left_;
  r.right_ = right_;
  r.size_ = sorted.size();
  r.left_table_.resize(left_->order() * r.size_);
  r.right_table_.resize(right_->order() * r.size_);
  for (std::size_t h = 0; h < left_->order(); ++h)
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      auto img = pos[act_left(h, sorted[i])];
      if (img < 0) throw InputError("point set is not closed under the left action");
      r.left_table_[h * r.size_ + i] = static_cast<std::uint32_t>(img);
    }
  for (std::size_t g = 0; g < right_->order(); ++g)
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      auto img = pos[act_right(sorted[i], g)];
      if (img < 0) throw InputError("point set is not closed under the right action");
      r.right_table_[g * r.size_ + i] = static_cast<std::uint32_t>(img);
    }
  return r;
}

bool Biset::left_transitive() const {
  if (size_ == 0) return true;
  std::vector<bool> hit(size_, false);
  for (std::size_t h = 0; h < left_->order(); ++h) hit[act_left(h, 0)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
}

bool Biset::right_transitive() const {
  if (size_ == 0) return true;
  std::vector<bool> hit(size_, false);
  for (std::size_t g = 0; g < right_->order(); ++g) hit[act_right(0, g)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
}

bool Biset::left_acts_trivially(const Subgroup& sub) const {
  for (auto h : sub.generators())
    for (std::uint32_t x = 0; x < size_; ++x)
      if (act_left(h, x) != x) return false;
  return true;
}

bool Biset::right_acts_trivially(const Subgroup& sub) const {
  for (auto g : sub.generators())
    for (std::uint32_t x = 0; x < size_; ++x)
      if (act_right(x, g) != x) return false;
  return true;
}

StabilizerChain stabilizer_chain(const Biset& b, std::uint32_t alpha) {
  if (alpha >= b.size()) throw InputError("point outside the biset");
  const auto& H = b.left_group();
  const auto& G = b.right_group();
  std::vector<bool> in_h_alpha(b.size(), false), in_alpha_g(b.size(), false);
  for (std::size_t h = 0; h < H->order(); ++h) in_h_alpha[b.act_left(h, alpha)] = true;
  for (std::size_t g = 0; g < G->order(); ++g) in_alpha_g[b.act_right(alpha, g)] = true;
  std::vector<std::size_t> g0, g1, h0, h1;
  for (std::size_t g = 0; g < G->order(); ++g) {
    auto y = b.act_right(alpha, g);
    if (y == alpha) g0.push_back(g);
    if (in_h_alpha[y]) g1.push_back(g);
  }
  for (std::size_t h = 0; h < H->order(); ++h) {
    auto y = b.act_left(h, alpha);
    if (y == alpha) h0.push_back(h);
    if (in_alpha_g[y]) h1.push_back(h);
  }
  StabilizerChain c;
  try {
    c = StabilizerChain{Subgroup(G, g0), Subgroup(G, g1), Subgroup(H, h0), Subgroup(H, h1)};
  } catch (const InputError&) {
    throw StructuralError("action tables inconsistent: stabilizer is not a subgroup");
  }
  if (c.g1.order() * c.h0.order() != c.g0.order() * c.h1.order())
    throw StructuralError("action tables inconsistent: |G1:G0| != |H1:H0|");
  auto normal_in = [](const Subgroup& n, const Subgroup& big) {
    const auto& grp = *n.parent();
    for (auto s : big.generators())
      for (auto x : n.generators())
        if (!n.contains(grp.mul(grp.mul(s, x), grp.inv(s)))) return false;
    return true;
  };
  if (!normal_in(c.g0, c.g1) || !normal_in(c.h0, c.h1))
    throw StructuralError("action tables inconsistent: stabilizer not normal");
  return c;
}

std::size_t match_right_to_left(const Biset& b, std::uint32_t alpha, std::size_t g) {
  const auto target = b.act_right(alpha, g);
  for (std::size_t h = 0; h < b.left_group()->order(); ++h)
    if (b.act_left(h, alpha) == target) return h;
  throw InputError("element does not lie in G1");
}

std::size_t match_left_to_right(const Biset& b, std::uint32_t alpha, std::size_t h) {
  const auto target = b.act_left(h, alpha);
  for (std::size_t g = 0; g < b.right_group()->order(); ++g)
    if (b.act_right(alpha, g) == target) return g;
  throw InputError("element does not lie in H1");
}

BisetProduct biset_product(const Biset& outer, const Biset& inner) {
  if (!same_group(*outer.right_group(), *inner.left_group()))
    throw InputError("biset product: middle groups differ");
  const auto& H = *inner.left_group();
  const std::size_t n1 = inner.size(), n2 = outer.size();
  detail::Dsu dsu(n1 * n2);
  for (const auto& hp : H.generators()) {
    const auto h_in = *inner.left_group()->index_of(hp);
    const auto h_out = *outer.right_group()->index_of(hp);
    for (std::uint32_t b2 = 0; b2 < n2; ++b2)
      for (std::uint32_t b1 = 0; b1 < n1; ++b1)
        dsu.unite(outer.act_right(b2, h_out) * n1 + b1, b2 * n1 + inner.act_left(h_in, b1));
  }
  std::size_t count = 0;
  auto ids = dsu.class_ids(&count);
  BisetProduct out;
  out.class_of.assign(ids.begin(), ids.end());
  std::vector<std::size_t> rep(count);
  for (std::size_t i = ids.size(); i-- > 0;) rep[ids[i]] = i;

  std::vector<Perm> left_gens, right_gens;
  for (std::size_t s = 0; s < outer.left_group()->generators().size(); ++s) {
    const auto l = *outer.left_group()->index_of(outer.left_group()->generators()[s]);
    std::vector<std::uint32_t> im(count);
    for (std::size_t c = 0; c < count; ++c) {
      const auto b2 = rep[c] / n1, b1 = rep[c] % n1;
      im[c] = static_cast<std::uint32_t>(ids[outer.act_left(l, static_cast<std::uint32_t>(b2)) * n1 + b1]);
    }
    left_gens.emplace_back(im);
  }
  for (std::size_t s = 0; s < inner.right_group()->generators().size(); ++s) {
    const auto g = *inner.right_group()->index_of(inner.right_group()->generators()[s]);
    std::vector<std::uint32_t> im(count);
    for (std::size_t c = 0; c < count; ++c) {
      const auto b2 = rep[c] / n1, b1 = rep[c] % n1;
      im[c] = static_cast<std::uint32_t>(ids[b2 * n1 + inner.act_right(static_cast<std::uint32_t>(b1), g)]);
    }
    right_gens.emplace_back(im);
  }
  out.product = Biset::from_generators(outer.left_group(), inner.right_group(), count, left_gens, right_gens);
  return out;
}

Biset opposite_biset(const Biset& b) {
  const auto& H = *b.left_group();
  const auto& G = *b.right_group();
  std::vector<Perm> left_gens, right_gens;
  for (const auto& g : G.generators()) {
    const auto gi = G.inv(*G.index_of(g));
    std::vector<std::uint32_t> im(b.size());
    for (std::uint32_t x = 0; x < b.size(); ++x) im[x] = b.act_right(x, gi);
    left_gens.emplace_back(im);
  }
  for (const auto& h : H.generators()) {
    const auto hi = H.inv(*H.index_of(h));
    std::vector<std::uint32_t> im(b.size());
    for (std::uint32_t x = 0; x < b.size(); ++x) im[x] = b.act_left(hi, x);
    right_gens.emplace_back(im);
  }
  return Biset::from_generators(b.right_group(), b.left_group(), b.size(), left_gens, right_gens);
}

}  // namespace eirep
