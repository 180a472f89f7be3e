#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eirep/category.hpp"
#include "eirep/field.hpp"
#include "eirep/modrep.hpp"

namespace eirep {

struct OrdinaryVertex {
  std::size_t object = 0;
  std::size_t simple = 0;  // index into simple_modules of the object's group
  std::size_t dim = 0;
  bool trivial = false;
};

struct OrdinaryArrow {
  std::size_t src = 0, tgt = 0;  // vertex indices
  std::size_t multiplicity = 0;
  std::size_t ei_arrow = 0;  // arrow of the EI quiver it comes from
};

/// One summand type U of k induced from G0 to G1, with its multiplicities
/// in the restrictions of each simple at the source and target.
struct SummandMultiplicities {
  std::size_t dim = 0;
  std::vector<std::size_t> e;  // per simple of G
  std::vector<std::size_t> f;  // per simple of H
};

struct OrdinaryQuiver {
  Field field;
  std::vector<std::string> objects;
  std::vector<OrdinaryVertex> vertices;
  std::vector<OrdinaryArrow> arrows;  // multiplicity > 0 only
  std::vector<std::vector<std::size_t>> object_vertices;  // per object, vertex indices in simple order
  std::vector<std::vector<SummandMultiplicities>> summands;  // per EI arrow

  std::size_t arrow_count() const;
  std::string vertex_name(std::size_t v) const;
};

/// Ordinary quiver of an EI quiver whose groups have orders invertible in f; f must split them.
/// alpha_points[i] selects the orbit representative of arrow i (default: point 0).
/// Throws PreconditionError on a non-invertible group order, FieldNotSplittingError when f does not split.
OrdinaryQuiver ordinary_quiver(const EIQuiver& q, const Field& f, std::uint64_t seed = 0,
                               const std::vector<std::uint32_t>& alpha_points = {});
OrdinaryQuiver ordinary_quiver(const FiniteCategory& c, const Field& f, std::uint64_t seed = 0);
/// Splitting prime field for every automorphism group of c.
Field ordinary_quiver_field(const FiniteCategory& c);

/// Directed cycle through the arrows, if any.
std::optional<std::vector<std::size_t>> directed_cycle(std::size_t vertices,
                                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct DynkinComponent {
  std::vector<std::size_t> vertices;
  std::string type;     // "A5", "D4", "E6", ... or "not-Dynkin"
  std::string witness;  // why it is not Dynkin
  std::vector<std::size_t> witness_vertices;
  bool dynkin() const { return type != "not-Dynkin"; }
};

struct DynkinReport {
  std::vector<DynkinComponent> components;
  bool all_dynkin() const;
};

/// Classifies the underlying undirected multigraph of each connected component.
DynkinReport dynkin_classify(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
DynkinReport dynkin_classify(const Quiver& q);
DynkinReport dynkin_classify(const OrdinaryQuiver& q);

struct FreeInvertibleResult {
  bool applicable = false;
  std::string reason;  // when not applicable
  bool finite = false;
  std::optional<OrdinaryQuiver> quiver;
  DynkinReport report;
};

/// Representation type of a free EI category whose automorphism orders are invertible in
/// characteristic p (0 allowed): finite iff the ordinary quiver is a union of Dynkin quivers.
FreeInvertibleResult decide_free_invertible(const FiniteCategory& c, std::uint32_t p, std::uint64_t seed = 0);

}  // namespace eirep
