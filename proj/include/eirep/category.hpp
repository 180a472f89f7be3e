#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eirep/biset.hpp"
#include "eirep/group.hpp"

namespace eirep {

struct MorphismInfo {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

/**
 * @brief Finite category given by explicit morphisms and a composition table.
 *
 * compose(g, f) is g after f and is defined exactly when tgt(f) = src(g).
 * Construction only checks the shape of the data; the category axioms are
 * reported by structure_issues() so that broken documents can be diagnosed.
 */
class FiniteCategory {
 public:
  static constexpr std::int32_t kUndefined = -1;

  /// table[g * M + f] = g after f, or kUndefined.
  FiniteCategory(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                 std::vector<std::size_t> identities, std::vector<std::int32_t> table);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(std::size_t x) const { return objects_[x]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  std::optional<std::size_t> object_index(const std::string& name) const;
  const MorphismInfo& morphism(std::size_t m) const { return morphisms_[m]; }
  std::optional<std::size_t> morphism_index(const std::string& name) const;
  std::size_t identity(std::size_t x) const { return identities_[x]; }
  bool is_identity(std::size_t m) const { return identities_[morphisms_[m].src] == m; }

  std::int32_t compose(std::size_t g, std::size_t f) const {
    return table_[g * morphisms_.size() + f];
  }
  /// Composite that must exist; throws StructuralError otherwise.
  std::size_t compose_checked(std::size_t g, std::size_t f) const;

  /// Morphisms x -> y in increasing id order.
  const std::vector<std::size_t>& hom(std::size_t x, std::size_t y) const {
    return hom_[x * objects_.size() + y];
  }
  /// Position of m inside hom(src(m), tgt(m)).
  std::size_t position_in_hom(std::size_t m) const { return hom_pos_[m]; }

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<std::int32_t> table_;
  std::vector<std::vector<std::size_t>> hom_;
  std::vector<std::size_t> hom_pos_;
  std::unordered_map<std::string, std::size_t> object_by_name_;
  std::unordered_map<std::string, std::size_t> morphism_by_name_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

struct StructureIssue {
  std::string kind;    // "identity", "composition", "associativity"
  std::string detail;  // names the offending morphisms
};

/// Violations of the category axioms, at most `limit` of them.
std::vector<StructureIssue> structure_issues(const FiniteCategory& c, std::size_t limit = 16);

struct ValidationReport {
  bool category_ok = false;
  bool ei = false;
  bool connected = false;
  bool skeletal = false;
  std::vector<std::string> problems;
  bool ok() const { return category_ok && ei && connected && skeletal; }
};

/// Non-throwing check of the axioms plus the EI, connectedness and skeletal properties.
ValidationReport check_category(const FiniteCategory& c);
/// Throws StructuralError unless c is a category in which every endomorphism is invertible.
ValidationReport validate_ei(const FiniteCategory& c);

bool is_isomorphism(const FiniteCategory& c, std::size_t m);
bool is_connected(const FiniteCategory& c);
bool is_skeletal(const FiniteCategory& c);
std::vector<std::vector<std::size_t>> connected_components(const FiniteCategory& c);

/// Automorphism group C(x, x) in its regular permutation representation.
/// Element i is labelled by the morphism id it represents.
GroupPtr automorphism_group(const FiniteCategory& c, std::size_t x);
/// Group element index of an automorphism.
std::size_t element_of_morphism(const FiniteGroup& aut, std::size_t morphism);

/// C(x, y) as a (C(y,y), C(x,x))-biset; carrier point i is hom(x, y)[i].
struct HomBiset {
  std::size_t x = 0, y = 0;
  GroupPtr g;  // C(x, x), acting on the right
  GroupPtr h;  // C(y, y), acting on the left
  Biset biset;
  std::vector<std::size_t> points;
};
HomBiset hom_biset(const FiniteCategory& c, std::size_t x, std::size_t y);

/// Non-isomorphisms admitting no factorization through two non-isomorphisms.
std::vector<std::size_t> unfactorizables(const FiniteCategory& c);
bool is_unfactorizable(const FiniteCategory& c, std::size_t m);
/// Unfactorizable morphisms a1, ..., an with alpha = an after ... after a1.
/// An isomorphism factorizes as the empty list.
std::vector<std::size_t> factorize(const FiniteCategory& c, std::size_t alpha);

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

struct Poset {
  std::size_t size = 0;
  std::vector<bool> leq;  // leq[a * size + b]
  bool le(std::size_t a, std::size_t b) const { return leq[a * size + b]; }
};

/// Underlying quiver (one arrow per two-sided orbit of unfactorizable morphisms)
/// and the reachability poset. representatives[i] is the least morphism of arrow i.
struct UnderlyingStructure {
  Quiver quiver;
  Poset poset;
  std::vector<std::size_t> representatives;
};
UnderlyingStructure underlying_quiver_and_poset(const FiniteCategory& c);

/// Quiver whose vertices carry groups and whose arrows carry bisets.
struct EIArrow {
  std::string name;
  std::size_t src = 0, tgt = 0;
  Biset biset;  // (aut(tgt), aut(src))-biset
};

struct EIQuiver {
  std::vector<std::string> objects;
  std::vector<GroupPtr> groups;
  std::vector<EIArrow> arrows;
};

/// Throws InputError on group mismatches or directed cycles.
void check_ei_quiver(const EIQuiver& q);

/// The EI quiver of c: one arrow per orbit of unfactorizables, carrying that orbit.
/// carriers[i][j] is the morphism of c at point j of arrow i.
struct UnderlyingEIQuiver {
  EIQuiver quiver;
  std::vector<std::vector<std::size_t>> carriers;
};
UnderlyingEIQuiver underlying_ei_quiver(const FiniteCategory& c);

/// Free EI category of an EI quiver. For a path morphism, `path` lists arrow indices
/// in application order and `points` the carrier points of a representative tuple.
struct CoverMorphism {
  bool is_automorphism = true;
  std::size_t object = 0;   // for automorphisms
  std::size_t element = 0;  // group element index
  std::vector<std::size_t> path;
  std::vector<std::uint32_t> points;
};

struct FreeCover {
  CategoryPtr category;
  std::vector<CoverMorphism> provenance;
};
FreeCover free_ei_cover(const EIQuiver& q);

/// Canonical functor from the free cover of c's EI quiver back to c (morphism map).
struct CoverFunctor {
  FreeCover cover;
  std::vector<std::size_t> image;
};
CoverFunctor cover_functor(const FiniteCategory& c);
bool is_free(const FiniteCategory& c);

struct Embedding {
  CategoryPtr category;
  std::vector<std::size_t> object_to_parent;
  std::vector<std::size_t> to_parent;  // morphism map
};

Embedding full_subcategory(const FiniteCategory& c, const std::vector<std::size_t>& objects);
/// Subcategory on given objects and morphisms; identities are added automatically.
/// Throws InputError unless the morphism set is closed under composition.
Embedding subcategory(const FiniteCategory& c, const std::vector<std::size_t>& objects,
                      const std::vector<std::size_t>& morphisms);
CategoryPtr opposite(const FiniteCategory& c);
/// One object per isomorphism class (full subcategory on the least representative).
Embedding skeleton(const FiniteCategory& c);
/// Identifies morphisms in the same two-sided orbit; groups become trivial.
/// Throws StructuralError when the induced composition is not well defined.
CategoryPtr quotient_orbit_collapse(const FiniteCategory& c);
/// The underlying poset viewed as a category.
CategoryPtr poset_collapse(const FiniteCategory& c);

/// Explicit description: morphisms include the identities; triples are (f, g, g after f).
/// Composites with an identity may be omitted and are filled in.
struct ExplicitCategory {
  std::vector<std::string> objects;
  std::vector<MorphismInfo> morphisms;
  std::vector<std::size_t> identities;
  std::vector<std::array<std::size_t, 3>> triples;
};
/// Throws InputError on out-of-range or contradictory triples; axioms are not checked here.
CategoryPtr build_category(const ExplicitCategory& def);

/// Category with two objects x, y given by groups and one biset (x -> y).
CategoryPtr two_object_category(const GroupPtr& g, const GroupPtr& h, const Biset& b,
                                const std::string& x = "x", const std::string& y = "y");

}  // namespace eirep
