#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace eirep {

/// Permutation of {0, ..., n-1}; images[i] is the image of i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Composition a * b = a after b, i.e. (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * @brief Finite permutation group with all elements enumerated.
 *
 * Element 0 is the identity. Every element i other than the identity is
 * reached as element(word_parent(i)) * generator(word_generator(i)), so
 * a homomorphism defined on generators can be evaluated on any element.
 * Optional labels attach an external id (e.g. a morphism id) to each element.
 */
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 1u << 16;

  /// Enumerates the group generated by gens. Throws InputError on degree mismatch
  /// and ResourceError when the order exceeds kMaxOrder.
  static GroupPtr generated_by(std::size_t degree, std::vector<Perm> gens);
  static GroupPtr trivial();
  static GroupPtr cyclic(std::size_t n);
  static GroupPtr symmetric(std::size_t n);
  /// Direct product acting on the disjoint union of the two point sets.
  static GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

  /// Copy of this group with element labels attached (labels[i] labels element i).
  GroupPtr with_labels(std::vector<std::int64_t> labels) const;

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const { return orders_[a]; }
  std::size_t pow(std::size_t a, std::size_t k) const;

  std::size_t word_parent(std::size_t i) const { return parent_[i]; }
  std::size_t word_generator(std::size_t i) const { return parent_gen_[i]; }
  /// Generator indices w with element(i) = gen[w0] * gen[w1] * ... .
  std::vector<std::size_t> word(std::size_t i) const;

  bool has_labels() const { return !labels_.empty(); }
  std::int64_t label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of_label(std::int64_t label) const;

  bool is_abelian() const;
  std::size_t exponent() const;

 private:
  FiniteGroup() = default;
  void enumerate();

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::uint32_t> table_;  // dense multiplication table for small groups
  std::vector<std::int64_t> labels_;
  std::unordered_map<std::int64_t, std::size_t> label_index_;
};

/// True when both groups have the same degree and the same element set.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// Subgroup of a parent group, stored as a sorted set of parent element indices.
class Subgroup {
 public:
  Subgroup() = default;
  /// elements must be closed under multiplication; checked.
  Subgroup(GroupPtr parent, std::vector<std::size_t> elements);

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return elems_.size(); }
  std::size_t index() const { return parent_->order() / elems_.size(); }
  const std::vector<std::size_t>& elements() const { return elems_; }
  bool contains(std::size_t g) const { return member_[g]; }
  bool is_whole() const { return elems_.size() == parent_->order(); }
  bool is_trivial() const { return elems_.size() == 1; }

  /// A generating set (parent element indices), found greedily.
  const std::vector<std::size_t>& generators() const { return gens_; }
  /// The subgroup as a standalone permutation group; labels are inherited.
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }

 private:
  GroupPtr parent_;
  std::vector<std::size_t> elems_;
  std::vector<bool> member_;
  std::vector<std::size_t> gens_;
};

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& seeds);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& sub);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);

/// p-part of n, e.g. p_part(12, 2) = 4. p_part(n, 0) = 1.
std::size_t p_part(std::size_t n, std::uint32_t p);
bool is_prime(std::uint64_t n);
bool is_p_power(std::size_t n, std::uint32_t p);
bool is_p_group(const FiniteGroup& g, std::uint32_t p);

/// Elements whose order is a power of p (including the identity).
std::vector<std::size_t> p_elements(const FiniteGroup& g, std::uint32_t p);
/// True when a Sylow p-subgroup is cyclic. Always true for p = 0.
bool sylow_p_cyclic(const FiniteGroup& g, std::uint32_t p);
/// The subgroup generated by all p-elements. Trivial for p = 0.
Subgroup o_p_prime(const GroupPtr& g, std::uint32_t p);
/// The normal Sylow p-subgroup if the Sylow p-subgroup is normal and nontrivial.
std::optional<Subgroup> normal_sylow(const GroupPtr& g, std::uint32_t p);
/// |A \ H / B| for subgroups A, B of the same parent.
std::size_t double_coset_count(const Subgroup& a, const Subgroup& b);
/// Left coset representatives of sub (g with g*sub distinct), smallest index first.
std::vector<std::size_t> left_coset_reps(const Subgroup& sub);

}  // namespace eirep
