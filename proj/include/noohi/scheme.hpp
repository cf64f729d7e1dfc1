#ifndef NOOHI_SCHEME_HPP
#define NOOHI_SCHEME_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noohi/group_spec.hpp"
#include "noohi/homo.hpp"

namespace noohi {

// Combinatorial model of a singular scheme: the normalizations of its
// irreducible components, the connected components of the singular locus,
// and the branches (connected components of the preimage of the singular
// locus), each with a finite group. A branch b over component i and singular
// j carries psi_b : K_b -> G_i and phi_b : K_b -> H_j. The bipartite incidence
// multigraph has components and singulars as vertices and branches as edges.

struct Component {
  std::string id;
  GroupSpec group;

  bool operator==(const Component&) const = default;
};

struct Singular {
  std::string id;
  GroupSpec group;

  bool operator==(const Singular&) const = default;
};

struct Branch {
  std::string id;
  std::string component;
  std::string singular;
  GroupSpec group;
  Homo psi;  ///< group -> component group
  Homo phi;  ///< group -> singular group

  bool operator==(const Branch&) const = default;
};

class SchemeConfig {
 public:
  std::vector<Component> components;
  std::vector<Singular> singulars;
  std::vector<Branch> branches;

  SchemeConfig& add_component(std::string id, GroupSpec group = {});
  SchemeConfig& add_singular(std::string id, GroupSpec group = {});
  /// Images default to the trivial map when omitted; they are words on the
  /// canonical generators of the component / singular group.
  SchemeConfig& add_branch(std::string id, std::string component, std::string singular,
                           GroupSpec group = {}, std::map<GeneratorSymbol, Word> psi = {},
                           std::map<GeneratorSymbol, Word> phi = {});

  std::size_t n() const noexcept { return components.size(); }
  std::size_t m() const noexcept { return singulars.size(); }
  std::size_t branch_count() const noexcept { return branches.size(); }

  const Component& component(std::string_view id) const;
  const Singular& singular(std::string_view id) const;
  bool has_component(std::string_view id) const;
  bool has_singular(std::string_view id) const;

  /// Branches over component `id` / singular `id`, in declaration order.
  std::vector<const Branch*> branches_of_component(std::string_view id) const;
  std::vector<const Branch*> branches_of_singular(std::string_view id) const;

  /// True when every singular and branch group is trivial.
  bool zero_dimensional_singularities() const;

  bool operator==(const SchemeConfig&) const = default;
};

struct Diagnostic {
  std::string invariant;
  std::vector<std::string> ids;
  std::string message;
};

struct ValidationResult {
  std::optional<Diagnostic> diagnostic;
  bool ok() const noexcept { return !diagnostic; }
};

/// Checks every invariant of a configuration; reports the first violation.
ValidationResult validate(const SchemeConfig& cfg);
/// Throws PreconditionError carrying the diagnostic when `cfg` is invalid.
void require_valid(const SchemeConfig& cfg);

/// True when the incidence multigraph is connected (an empty graph is not).
bool incidence_connected(const SchemeConfig& cfg);

struct Provenance {
  /// "T" for a single singular's neighbourhood, "T-complement" for the union
  /// of all the others, "union" for an arbitrary set of singulars.
  std::string kind;
  std::string anchor;
  std::vector<std::string> component_ids;
  std::vector<std::string> singular_ids;
  std::vector<std::string> branch_ids;

  bool operator==(const Provenance&) const = default;
};

/// A configuration cut out of a larger one by a set of singulars.
struct SubConfig {
  SchemeConfig config;
  Provenance provenance;
};

/// Union of the T_j for j in `singular_ids`: those singulars, their branches,
/// and every component touched by one of those branches.
SubConfig restrict_to_singulars(const SchemeConfig& cfg, const std::vector<std::string>& singular_ids);

/// T_j: the components meeting Z_j, with Z_j and its branches only.
SubConfig build_T(const SchemeConfig& cfg, std::string_view singular_id);
/// Union of T_t for t != k. Requires m >= 2.
SubConfig build_T_complement(const SchemeConfig& cfg, std::string_view singular_id);

/// Greedy order in which every prefix union of T's is connected; the first
/// singular is the first declared one, ties go to the lowest declaration index.
std::vector<std::string> devissage_order(const SchemeConfig& cfg);
bool is_valid_devissage_order(const SchemeConfig& cfg, const std::vector<std::string>& order);
/// Every valid order (by brute force over permutations; m <= 8).
std::vector<std::vector<std::string>> all_devissage_orders(const SchemeConfig& cfg);

struct IntersectionReport {
  std::string anchor;
  std::vector<std::string> s1;  ///< components meeting the anchor singular
  std::vector<std::string> s2;  ///< components meeting some other singular
  std::vector<std::string> s;   ///< s1 and s2 together; one piece each
  std::vector<Component> pieces;
  std::size_t m1 = 0;  ///< branches over the anchor
  std::size_t m2 = 0;  ///< the remaining branches
  std::size_t d() const noexcept { return s.size(); }
};

IntersectionReport intersection(const SchemeConfig& cfg, const SubConfig& t, const SubConfig& complement);

/// m~ - m - n + 1, cross-checked against the cycle rank. Requires a
/// connected configuration.
long free_rank(const SchemeConfig& cfg);
/// E - V + c of the incidence multigraph, counted as the number of edges
/// closing a cycle in a spanning forest.
long cycle_rank(const SchemeConfig& cfg);

struct SplitStep {
  std::string anchor;
  SubConfig t;
  SubConfig complement;
  IntersectionReport intersection;
  long rank_whole = 0;
  long rank_t = 0;
  long rank_complement = 0;
  /// rank_whole == rank_t + rank_complement + d - 1
  bool additive = false;
};

struct DevissagePlan {
  std::vector<std::string> order;
  std::vector<SplitStep> splits;
};

/// The sequence of splits performed by the recursive computation: split off
/// the last singular of the order, continue with the complement. Requires
/// m >= 1. An explicit order must be valid.
DevissagePlan plan_devissage(const SchemeConfig& cfg,
                             std::optional<std::vector<std::string>> order = std::nullopt);

}  // namespace noohi

#endif
