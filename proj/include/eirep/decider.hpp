#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eirep/biset.hpp"
#include "eirep/category.hpp"
#include "json.hpp"

namespace eirep {

enum class Outcome { Finite, Infinite, Unknown };
enum class RuleStatus { Pass, Fail, NotApplicable, Unknown };

std::string to_string(Outcome o);
std::string to_string(RuleStatus s);
std::optional<Outcome> outcome_from_string(const std::string& s);
std::optional<RuleStatus> status_from_string(const std::string& s);

struct CriterionResult {
  std::string rule;      // "N1".."N11", "S0".."S7", "NORM", "COMP", "SUB", "END"
  std::string citation;  // from citation()
  RuleStatus status = RuleStatus::NotApplicable;
  nlohmann::json witness = nlohmann::json::object();
  std::string scope;  // empty for the input itself, e.g. "component {x, y}" otherwise

  friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<CriterionResult> trace;
  std::string field_used;
  std::uint32_t char_p = 0;

  /// The entry that settled the outcome, if any.
  const CriterionResult* deciding() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Reference string for a rule id; throws InputError for unknown ids.
const std::string& citation(const std::string& rule);

struct DecideOptions {
  bool extended = false;  // run N11
  std::uint64_t seed = 0;
  bool recurse = true;  // decide full subcategories before the terminal rules
};

/// Per ordered pair (x, y), x != y, with C(x, y) nonempty.
struct PairContext {
  std::size_t x = 0, y = 0;
  HomBiset hom;
  std::uint32_t alpha = 0;  // carrier point of the representative
  StabilizerChain chain;
  std::size_t orbits = 0;
  bool g_transitive = false, h_transitive = false;
  Subgroup opg, oph;       // O^{p'} of G and H
  std::size_t s = 1, t = 1;  // their orders
  std::size_t n_h = 1, n_g = 1;  // |H : H1|, |G : G1|
  std::size_t d_h = 1, d_g = 1;  // |H1\H/H1|, |G1\G/G1|
};

struct CriterionContext {
  CategoryPtr category;  // connected and skeletal
  std::uint32_t p = 0;
  DecideOptions options;
  std::vector<GroupPtr> groups;
  std::vector<PairContext> pairs;  // sorted by (x, y)
  bool free = false;
  bool p_groups = false;  // p > 0 and every automorphism group is a p-group
  UnderlyingEIQuiver ei;

  const PairContext* pair(std::size_t x, std::size_t y) const;
};

/// Builds the context of a connected skeletal EI category.
CriterionContext make_context(CategoryPtr c, std::uint32_t p, const DecideOptions& options = {});

namespace rules {
CriterionResult n1_cyclic_sylow(const CriterionContext& ctx);
CriterionResult n2_single_orbit(const CriterionContext& ctx);
CriterionResult n3_composites(const CriterionContext& ctx);
CriterionResult n4_dynkin_quiver(const CriterionContext& ctx);
CriterionResult n5_one_side_transitive(const CriterionContext& ctx);
CriterionResult n6_op_prime_trivial(const CriterionContext& ctx);
CriterionResult n7_p_subgroup_stabilizers(const CriterionContext& ctx);
CriterionResult n8_normal_sylow(const CriterionContext& ctx);
CriterionResult n9_double_cosets(const CriterionContext& ctx);
CriterionResult n10_adjacency(const CriterionContext& ctx);
CriterionResult n11_induced_tops(const CriterionContext& ctx);

CriterionResult s0_single_object(const CriterionContext& ctx);
CriterionResult s1_single_morphism(const CriterionContext& ctx);
CriterionResult s2_free_invertible(const CriterionContext& ctx);
CriterionResult s3_two_object_p_groups(const CriterionContext& ctx);
CriterionResult s4_three_object_p_groups(const CriterionContext& ctx);
CriterionResult s5_both_transitive(const CriterionContext& ctx);
CriterionResult s6_abelian(const CriterionContext& ctx);
CriterionResult s7_chain(const CriterionContext& ctx);
}  // namespace rules

/// Representation type over an algebraically closed field of characteristic p (0 or prime).
/// Throws StructuralError unless c is an EI category, InputError for a bad p.
Verdict decide(const FiniteCategory& c, std::uint32_t p, const DecideOptions& options = {});
/// decide on c and its opposite, combined; throws ConsistencyError when they contradict.
Verdict decide_symmetrized(const FiniteCategory& c, std::uint32_t p, const DecideOptions& options = {});

/// Re-checks a failed entry's witness against c (after the same normalization).
/// Returns false for witnesses that do not hold; entries without a checkable witness return true.
bool recheck_witness(const FiniteCategory& c, std::uint32_t p, const CriterionResult& r);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const Verdict& v);
/// Throws InputError on a malformed document.
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace eirep
