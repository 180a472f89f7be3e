#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eirep/group.hpp"

namespace eirep {

/**
 * @brief Finite (H, G)-biset: H acts on the left, G on the right, commuting.
 *
 * Actions are stored as full tables over group elements so that callers can
 * act by arbitrary elements without re-evaluating words.
 */
class Biset {
 public:
  Biset() = default;

  /// Builds the biset from generator images. left_gens[i] is the permutation of
  /// the carrier induced by H's generator i, right_gens[j] the map b -> b * g_j.
  /// Throws StructuralError when the data is not a biset.
  static Biset from_generators(GroupPtr left, GroupPtr right, std::size_t size,
                               const std::vector<Perm>& left_gens, const std::vector<Perm>& right_gens);

  const GroupPtr& left_group() const { return left_; }
  const GroupPtr& right_group() const { return right_; }
  std::size_t size() const { return size_; }

  std::uint32_t act_left(std::size_t h, std::uint32_t b) const { return left_table_[h * size_ + b]; }
  std::uint32_t act_right(std::uint32_t b, std::size_t g) const { return right_table_[g * size_ + b]; }

  /// Two-sided orbit index of every point; orbits are numbered by least point.
  std::vector<std::size_t> orbit_ids() const;
  std::size_t orbit_count() const;
  /// Least point of each two-sided orbit.
  std::vector<std::uint32_t> orbit_representatives() const;
  /// The sub-biset on the given union of orbits (points renumbered in increasing order).
  Biset restricted_to(const std::vector<std::uint32_t>& points) const;

  bool left_transitive() const;
  bool right_transitive() const;
  /// Points fixed by every element of the subgroup acting on the given side.
  bool left_acts_trivially(const Subgroup& sub) const;
  bool right_acts_trivially(const Subgroup& sub) const;

 private:
  GroupPtr left_, right_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> left_table_;
  std::vector<std::uint32_t> right_table_;
};

/**
 * @brief The stabilizer data of a point alpha.
 *
 * g0 = Stab_G(alpha), g1 = {g : alpha g in H alpha},
 * h0 = Stab_H(alpha), h1 = {h : h alpha in alpha G}.
 */
struct StabilizerChain {
  Subgroup g0, g1, h0, h1;
};

/// Computes the chain and checks |G1 : G0| = |H1 : H0| and normality (StructuralError otherwise).
StabilizerChain stabilizer_chain(const Biset& b, std::uint32_t alpha);

/// Some h in H with h * alpha = alpha * g. Requires g in G1.
std::size_t match_right_to_left(const Biset& b, std::uint32_t alpha, std::size_t g);
/// Some g in G with alpha * g = h * alpha. Requires h in H1.
std::size_t match_left_to_right(const Biset& b, std::uint32_t alpha, std::size_t h);

/// Biset product outer x_H inner, with inner an (H, G)-biset and outer an (L, H)-biset.
struct BisetProduct {
  Biset product;
  /// class_of[b2 * inner.size() + b1] = class of (b2, b1).
  std::vector<std::uint32_t> class_of;
};
BisetProduct biset_product(const Biset& outer, const Biset& inner);

/// The same carrier viewed as a (G, H)-biset via g . b . h := h^-1 b g^-1.
Biset opposite_biset(const Biset& b);

}  // namespace eirep
