#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eirep/category.hpp"
#include "eirep/field.hpp"
#include "eirep/matrix.hpp"
#include "eirep/modrep.hpp"

namespace eirep {

/// Category algebra: basis Mor C, product g * f = g after f or 0.
struct CategoryAlgebra {
  CategoryPtr category;
  Field field;

  std::size_t dim() const { return category->morphism_count(); }
  /// Product of basis elements, or nullopt for zero.
  std::optional<std::size_t> basis_product(std::size_t g, std::size_t f) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Sum of the object identities.
  Vec unit() const;
};

/// Throws StructuralError when the composition table is not associative.
CategoryAlgebra category_algebra(CategoryPtr c, const Field& f);

/// Representation of a finite category: a space per object and a matrix per morphism.
struct CatRep {
  CategoryPtr category;
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> mats;  // mats[m] has shape dims[tgt m] x dims[src m]
};

/// Violations of functoriality (shape, identities, composites), at most `limit`.
std::vector<std::string> functoriality_issues(const CatRep& r, std::size_t limit = 16);
/// Builds and validates; throws StructuralError on a functoriality violation.
CatRep make_rep(CategoryPtr c, const Field& f, std::vector<std::size_t> dims, std::vector<Matrix> mats);
/// Extends matrices given on a generating set of morphisms to all morphisms by composition.
/// Throws InputError when some morphism is not generated, StructuralError on conflicts.
CatRep rep_from_generators(CategoryPtr c, const Field& f, std::vector<std::size_t> dims,
                           const std::map<std::size_t, Matrix>& given);
CatRep zero_rep(CategoryPtr c, const Field& f);
CatRep direct_sum(const CatRep& a, const CatRep& b);

/// R(x) as a module over automorphism_group(c, x).
FqModule object_module(const CatRep& r, std::size_t x);

/// R composed with the inclusion of a subcategory.
CatRep restrict_rep(const CatRep& r, const Embedding& d);
/// kC tensored over kD with N, as the cokernel of the balancing relations.
CatRep induce_rep(const CatRep& n, const Embedding& d, CategoryPtr c);

/// Representation data of a two-object category x -> y with one biset orbit:
/// v over C(x, x), w over C(y, y), phi = R(alpha) of shape w.dim x v.dim, where
/// alpha is the point of C(x, y) with index `alpha` in hom(x, y).
struct TwoObjectRepWitness {
  FqModule v, w;
  Matrix phi;
  std::uint32_t alpha = 0;
};

/// Source, target and chosen point of a two-object category with a single biset orbit.
struct TwoObjectShape {
  std::size_t x = 0, y = 1;
  HomBiset hom;
  std::uint32_t alpha = 0;
};
/// Throws PreconditionError unless c has two objects and C(x, y) is one nonempty two-sided orbit.
TwoObjectShape two_object_shape(const FiniteCategory& c);

/// Checks the kernel/image conditions literally: ker phi is G1-stable, im phi is H1-stable,
/// G0 and H0 act trivially on the quotient and image, and phi intertwines G1 with H1.
bool rep_valid(const TwoObjectRepWitness& w, const Biset& b, std::uint32_t alpha);
/// Basis of the linear space of phi with w(h) phi = phi v(g) whenever alpha g = h alpha.
std::vector<Matrix> valid_connecting_maps(const FqModule& v, const FqModule& w, const Biset& b,
                                          std::uint32_t alpha);
/// The representation with R(h alpha g) = w(h) phi v(g); throws InputError if rep_valid fails.
CatRep rep_from_witness(const TwoObjectRepWitness& w, CategoryPtr c);
TwoObjectRepWitness witness_from_rep(const CatRep& r);

/// Induction along D in C for two-object categories with H transitive on C(x, y) and
/// Stab_H(alpha G') inside H'. The witness is over D; the result is over C.
/// Throws PreconditionError when the hypotheses fail.
TwoObjectRepWitness induce_two_object_fastpath(const TwoObjectRepWitness& w, const Embedding& d,
                                               const FiniteCategory& c);

struct CatHomSpace {
  std::size_t dim = 0;
  std::vector<std::vector<Matrix>> basis;  // one matrix per object
};
/// Natural transformations R1 -> R2.
CatHomSpace catrep_hom_space(const CatRep& r1, const CatRep& r2);
std::optional<std::vector<Matrix>> find_catrep_isomorphism(const CatRep& r1, const CatRep& r2,
                                                           std::uint64_t seed = 0);
bool catrep_is_isomorphic(const CatRep& r1, const CatRep& r2, std::uint64_t seed = 0);

}  // namespace eirep
