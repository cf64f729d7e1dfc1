#ifndef NOOHI_PI1_HPP
#define NOOHI_PI1_HPP

#include <optional>
#include <string>
#include <vector>

#include "noohi/expression.hpp"
#include "noohi/scheme.hpp"
#include "noohi/vk.hpp"

namespace noohi {

/// One step of a computation: which construction produced which node.
struct DerivationEntry {
  std::string theorem;  ///< regular, connected-singular-locus, devissage, closed-form
  std::string node;
  std::vector<std::string> inputs;

  bool operator==(const DerivationEntry&) const = default;
};

struct Pi1Result {
  Expr expression;
  /// Lowering of `expression` in `form`, before simplification.
  Presentation lowered;
  /// `lowered` after tietze_simplify (or a copy when simplification is off).
  Presentation presentation;
  std::vector<DerivationEntry> derivation;
  VKForm form = VKForm::i;
  bool simplified = true;

  bool operator==(const Pi1Result& rhs) const;
};

struct Pi1Options {
  VKForm form = VKForm::i;
  bool simplify = true;
  /// Dévissage order override; must be valid for the configuration.
  std::optional<std::vector<std::string>> order;
};

/// A configuration with exactly one singular component Z: one VK group per
/// component over Z and that component's branches, glued by a fibred
/// coproduct over the group of Z.
Pi1Result pi1_connected_singular(const SchemeConfig& cfg, const Pi1Options& options = {});

/// General route. m = 0 gives the component group, m = 1 the connected case;
/// otherwise the last singular k of the order is split off and the result is
/// the VK group of the pieces' groups over T_k and its complement.
Pi1Result pi1_devissage(const SchemeConfig& cfg, const Pi1Options& options = {});

/// Coproduct of the component groups with a free group of rank
/// m~ - m - n + 1. Trivial component groups and a rank-0 free factor are
/// left out. With `require_trivial_singulars`, any non-trivial singular or
/// branch group raises PreconditionError naming it.
Pi1Result pi1_closed_form(const SchemeConfig& cfg, bool require_trivial_singulars = true,
                          const Pi1Options& options = {});

/// Builds a result from an expression: lowers it and simplifies if asked.
Pi1Result finish_result(Expr expression, std::vector<DerivationEntry> derivation, const Pi1Options& options);

enum class Route { automatic, connected, devissage, closed };

std::string to_string(Route r);
Route parse_route(std::string_view text);

/// `automatic` picks the closed form when the singularities are
/// zero-dimensional and dévissage otherwise.
Pi1Result compute_pi1(const SchemeConfig& cfg, Route route, const Pi1Options& options = {});

}  // namespace noohi

#endif
