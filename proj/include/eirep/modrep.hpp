#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "eirep/error.hpp"
#include "eirep/field.hpp"
#include "eirep/group.hpp"
#include "eirep/matrix.hpp"

namespace eirep {

/// Finite-dimensional module over F[G]: one matrix per generator of G, acting on column vectors.
struct FqModule {
  Field field;
  GroupPtr group;
  std::size_t dim = 0;
  std::vector<Matrix> action;
};

/// A composition factor whose endomorphism ring is larger than the field.
class NonSplitFactorError : public FieldNotSplittingError {
 public:
  NonSplitFactorError(FqModule factor, std::size_t endo_dim);
  const FqModule& factor() const { return factor_; }
  std::size_t endomorphism_dim() const { return endo_dim_; }

 private:
  FqModule factor_;
  std::size_t endo_dim_;
};

/// Builds and validates a module; throws StructuralError when the generator relations fail.
FqModule make_module(const Field& f, GroupPtr g, std::size_t dim, std::vector<Matrix> action);
/// Checks the relations exhaustively for |G| <= 256, on 64 random words of length <= 8 otherwise.
void validate_module(const FqModule& m, std::uint64_t seed = 0);

/// Matrix of group element i, evaluated along its word in the generators.
Matrix element_matrix(const FqModule& m, std::size_t i);
std::vector<Matrix> element_matrices(const FqModule& m);

FqModule trivial_module(const Field& f, GroupPtr g);
/// F[G/A] with G permuting the left cosets of A.
FqModule permutation_module(const Field& f, const Subgroup& a);
FqModule regular_module(const Field& f, GroupPtr g);
/// Permutation representation from the action of each generator on points.
FqModule permutation_action_module(const Field& f, GroupPtr g, std::size_t points, const std::vector<Perm>& gen_actions);

/// Module over target obtained through a homomorphism given on elements (target index -> m.group index).
FqModule pullback(const FqModule& m, GroupPtr target, const std::function<std::size_t(std::size_t)>& to_source);
/// Moves a module to another group carrying the same element labels.
FqModule transport_by_labels(const FqModule& m, GroupPtr target);
/// Restriction to a subgroup of m.group; the result lives over a.as_group().
FqModule restrict(const FqModule& m, const Subgroup& a);
/// Induction from a.as_group() (m.group must have the elements of a) to a.parent().
FqModule induce(const FqModule& m, const Subgroup& a);

/// The module with matrices p^-1 A p.
FqModule conjugate(const FqModule& m, const Matrix& p);
FqModule direct_sum(const FqModule& a, const FqModule& b);
/// Action on an invariant subspace, in its echelon basis.
FqModule submodule(const FqModule& m, const Subspace& s);
/// Action on m / s, in the basis of unit vectors at the non-pivot coordinates of s.
FqModule quotient(const FqModule& m, const Subspace& s);
bool is_trivial_action(const FqModule& m);

struct HomSpace {
  std::size_t dim = 0;
  std::vector<Matrix> basis;  // each of shape n.dim x m.dim
};

/// All dn x dm matrices X with X a = b X for every pair (a, b).
HomSpace intertwiner_space(const Field& f, std::size_t dm, std::size_t dn,
                           const std::vector<std::pair<Matrix, Matrix>>& pairs);
/// All X with X m(g) = n(g) X for every generator g.
HomSpace hom_space(const FqModule& m, const FqModule& n);
std::optional<Matrix> find_isomorphism(const FqModule& m, const FqModule& n, std::uint64_t seed = 0);
bool is_isomorphic(const FqModule& m, const FqModule& n, std::uint64_t seed = 0);

/// Meataxe step: a proper nonzero submodule, or nullopt when m is irreducible.
std::optional<Subspace> proper_submodule(const FqModule& m, std::mt19937_64& rng);
bool is_irreducible(const FqModule& m, std::uint64_t seed = 0);
/// Composition factors with multiplicity.
std::vector<FqModule> chop(const FqModule& m, std::uint64_t seed = 0);

/// Pairwise non-isomorphic composition factors of the regular module, sorted by
/// (dimension, trivial first, generator traces). Throws NonSplitFactorError when
/// some factor has endomorphism dimension above 1.
std::vector<FqModule> simple_modules(const Field& f, GroupPtr g, std::uint64_t seed = 0);
/// Index into simples of the module isomorphic to s, if any.
std::optional<std::size_t> identify_simple(const FqModule& s, const std::vector<FqModule>& simples);
/// Composition multiplicities of m against a list of simples; throws InputError on an unlisted factor.
std::vector<std::size_t> composition_multiplicities(const FqModule& m, const std::vector<FqModule>& simples,
                                                    std::uint64_t seed = 0);

/// Smallest prime l != forbidden with l = 1 mod exponent(G) for all listed groups.
std::uint32_t splitting_prime(const std::vector<GroupPtr>& groups, std::uint32_t forbidden = 0);

struct TopSocle {
  std::vector<std::size_t> top, socle;  // multiplicity per entry of the simples list
  std::size_t radical_dim = 0;
};

/// Top and socle multiplicities; simples must be complete for m and have scalar endomorphisms.
TopSocle top_and_socle_multiplicities(const FqModule& m, const std::vector<FqModule>& simples,
                                      std::uint64_t seed = 0);
/// Radical of m: the common kernel of all maps to simples.
Subspace radical(const FqModule& m, const std::vector<FqModule>& simples);
/// Multiplicities of the layers rad^i m / rad^(i+1) m.
std::vector<std::vector<std::size_t>> radical_series(const FqModule& m, const std::vector<FqModule>& simples,
                                                     std::uint64_t seed = 0);

}  // namespace eirep
