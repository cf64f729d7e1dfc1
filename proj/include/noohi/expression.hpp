#ifndef NOOHI_EXPRESSION_HPP
#define NOOHI_EXPRESSION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "noohi/group_spec.hpp"
#include "noohi/presentation.hpp"
#include "noohi/vk.hpp"

namespace noohi {

// Symbolic description of a fundamental group, built from atoms (the groups
// of a configuration) by free groups, coproducts, fibred coproducts,
// quotients and VK nodes.
//
// Maps and relations inside the tree are written in atom coordinates: the
// symbol `A.g` denotes generator g of the atom with id A. Lowering an
// expression produces a presentation together with the image of every atom
// coordinate reachable in it.

enum class AtomRole {
  component,  ///< group of a normalized irreducible component
  singular,   ///< group of a connected component of the singular locus
  branch,     ///< group of a branch
  piece,      ///< group of a connected piece of an overlap (identified with its component's group)
};

std::string to_string(AtomRole role);
AtomRole parse_atom_role(std::string_view text);

struct AtomRef {
  std::string id;
  AtomRole role = AtomRole::component;
  GroupSpec group;

  bool operator==(const AtomRef&) const = default;
};

enum class ExprKind { atom, free_group, coproduct, fibered_coproduct, quotient, vk };

std::string to_string(ExprKind kind);
ExprKind parse_expr_kind(std::string_view text);

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// A map out of a leg or base group, images in atom coordinates.
using AtomMap = std::map<GeneratorSymbol, Word>;

struct ExprLeg {
  AtomRef group;
  AtomMap psi;  ///< into the first child (fibred coproduct: into child k)
  AtomMap phi;  ///< into the second child (unused for fibred coproducts)

  bool operator==(const ExprLeg&) const = default;
};

struct ExprNode {
  ExprKind kind = ExprKind::atom;
  std::string id;

  AtomRef atom;                 ///< atom; the base group of a fibred coproduct
  int rank = 0;                 ///< free_group
  std::string tag;              ///< free_group: namespace of its generators
  std::vector<Expr> children;   ///< coproduct, fibred coproduct, quotient (one), vk (pi, pi')
  std::vector<AtomMap> base_maps;                   ///< fibred coproduct: base -> child k
  std::vector<std::pair<Word, Word>> relations;     ///< quotient, atom coordinates
  std::vector<ExprLeg> legs;                        ///< vk

  bool operator==(const ExprNode& rhs) const;
};

/// Deep structural equality.
bool same_expression(const Expr& a, const Expr& b);

/// Hands out node ids n0, n1, ... in construction order.
class ExpressionBuilder {
 public:
  Expr atom(AtomRef ref);
  Expr free_group(int rank, std::string tag = "free");
  Expr coproduct(std::vector<Expr> children);
  Expr fibered_coproduct(AtomRef base, std::vector<Expr> children, std::vector<AtomMap> base_maps);
  Expr quotient(Expr child, std::vector<std::pair<Word, Word>> relations);
  Expr vk(Expr pi, Expr pi_prime, std::vector<ExprLeg> legs);

 private:
  std::string next_id();
  int counter_ = 0;
};

/// The generator `g` of an atom, as an atom-coordinate word.
Word atom_word(std::string_view atom_id, const GeneratorSymbol& g);

struct Lowered {
  Presentation presentation;
  /// Atom coordinate -> word in `presentation`. When an atom occurs several
  /// times the first occurrence (depth first, left to right) is kept.
  std::map<GeneratorSymbol, Word> atoms;
};

/// Lowers the tree; VK nodes are built in `form`.
Lowered lower(const Expr& expr, VKForm form = VKForm::i);

struct WitnessStep {
  std::string node;
  std::string kind;
  std::string rule;
  bool admitted = true;
};

struct WitnessTrace {
  std::vector<WitnessStep> steps;
  bool admitted = true;
  std::string failure;
};

/// Membership in the smallest class containing the etale groups of normal
/// schemes and discrete free groups and closed under coproducts, fibred
/// coproducts, quotients and VK groups: one step per node, children first.
WitnessTrace class_witness(const Expr& expr);

/// Number of nodes and depth, for summaries.
std::size_t expression_size(const Expr& expr);
std::size_t expression_depth(const Expr& expr);

}  // namespace noohi

#endif
