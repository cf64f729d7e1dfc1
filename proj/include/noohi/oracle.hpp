#ifndef NOOHI_ORACLE_HPP
#define NOOHI_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "noohi/bounds.hpp"
#include "noohi/perm.hpp"
#include "noohi/pi1.hpp"
#include "noohi/scheme.hpp"

namespace noohi {

// Degree-d covers of a configuration, rigidified: every fibre is identified
// with {0, ..., d-1}. A datum is an action of each component group and each
// singular group together with, for every branch b over (i, j), a bijection
// lambda_b from the fibre over i to the fibre over j that intertwines the two
// actions of the branch group:
//
//     lambda_b . rho_i(psi_b(a)) = tau_j(phi_b(a)) . lambda_b
//
// Relabelling the fibres is an action of Sym(d)^(n+m) on rigid data, so the
// groupoid cardinality of degree-d covers is rigid_count / (d!)^(n+m).

using Rational = boost::rational<std::int64_t>;

struct DescentDatum {
  int degree = 0;
  /// Generator images of each component group, in configuration order.
  std::vector<std::vector<SymIndex>> rho;
  /// Generator images of each singular group.
  std::vector<std::vector<SymIndex>> tau;
  /// One bijection per branch.
  std::vector<SymIndex> lambda;
};

using DatumVisitor = std::function<void(const DescentDatum&)>;

/// A priori size of the unpruned search: the product of the hom-space sizes
/// of all component and singular groups times (d!)^(m~).
double descent_search_estimate(const SchemeConfig& cfg, int d, const Bounds& bounds = {});

/// Serial depth-first enumeration in a fixed order (components, singulars,
/// then branches with the equivariance filter). Returns the rigid count and
/// hands every datum to `visit` when given. Throws ResourceError when the
/// estimate exceeds the ceiling.
std::uint64_t enumerate_descent_data(const SchemeConfig& cfg, int d, const Bounds& bounds = {},
                                     const DatumVisitor& visit = {});

/// Rigid count computed by summing, over singular actions, the product over
/// components of the per-branch numbers of admissible bijections. Parallel
/// over the singular actions.
std::uint64_t rigid_count(const SchemeConfig& cfg, int d, const Bounds& bounds = {});

/// rigid_count / (d!)^(n+m), exact.
Rational groupoid_cardinality(const SchemeConfig& cfg, int d, const Bounds& bounds = {});

/// Rigid data whose total space is connected: the graph on (vertex, point)
/// pairs with edges from the actions and from the bijections is connected.
/// Parallel over the first component's actions.
std::uint64_t connected_count(const SchemeConfig& cfg, int d, const Bounds& bounds = {});

/// True when the datum describes a connected cover.
bool datum_connected(const SchemeConfig& cfg, const DescentDatum& datum);

struct ConnectedComparison {
  std::uint64_t connected_rigid = 0;
  Rational cardinality;
  std::uint64_t transitive_count = 0;
  bool passed = false;

  bool operator==(const ConnectedComparison&) const = default;
};

struct OracleReport {
  int degree = 0;
  std::uint64_t rigid_count = 0;
  Rational groupoid_cardinality;
  std::uint64_t presentation_count = 0;
  bool passed = false;
  std::optional<ConnectedComparison> connected;

  bool operator==(const OracleReport&) const = default;
};

/// Checks groupoid_cardinality * d! == count_homs(result.presentation, d), and
/// with `with_connected` also the connected cardinality against the number
/// of transitive actions.
OracleReport compare(const SchemeConfig& cfg, int d, const Pi1Result& result, const Bounds& bounds = {},
                     bool with_connected = false);

/// (d!)^k as a checked 64-bit value.
std::int64_t relabelling_order(int d, std::size_t k);

namespace reference {

/// The same numbers by plain depth-first search over every tuple, serial.
std::uint64_t rigid_count(const SchemeConfig& cfg, int d, const Bounds& bounds = {});
std::uint64_t connected_count(const SchemeConfig& cfg, int d, const Bounds& bounds = {});

}  // namespace reference

}  // namespace noohi

#endif
