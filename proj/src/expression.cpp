#include "noohi/expression.hpp"

#include <algorithm>

#include "noohi/errors.hpp"
#include "noohi/homo.hpp"

namespace noohi {

namespace {

Word resolve(const Word& w, const std::map<GeneratorSymbol, Word>& atoms, std::string_view context) {
  for (const auto& l : w.letters()) {
    if (!atoms.count(l.symbol)) {
      throw InputError(std::string(context) + ": atom coordinate '" + l.symbol.str() +
                       "' does not occur in the operand");
    }
  }
  return w.substituted(atoms);
}

std::map<GeneratorSymbol, Word> retag_values(const std::map<GeneratorSymbol, Word>& atoms,
                                             std::string_view tag) {
  std::map<GeneratorSymbol, Word> out;
  for (const auto& [k, w] : atoms) out.emplace(k, w.retagged(tag));
  return out;
}

void merge_first(std::map<GeneratorSymbol, Word>& into, const std::map<GeneratorSymbol, Word>& from) {
  for (const auto& [k, w] : from) into.emplace(k, w);
}

std::map<GeneratorSymbol, Word> compose_values(const std::map<GeneratorSymbol, Word>& atoms,
                                               const std::map<GeneratorSymbol, Word>& embedding) {
  std::map<GeneratorSymbol, Word> out;
  for (const auto& [k, w] : atoms) out.emplace(k, w.substituted(embedding));
  return out;
}

/// Images of a leg's generators, resolved into an operand.
std::map<GeneratorSymbol, Word> leg_images(const AtomRef& group, const AtomMap& map,
                                           const std::map<GeneratorSymbol, Word>& atoms,
                                           std::string_view context) {
  std::map<GeneratorSymbol, Word> images;
  for (const auto& g : group.group.presentation().generators()) {
    auto it = map.find(g);
    images[g] = it == map.end() ? Word{} : resolve(it->second, atoms, context);
  }
  for (const auto& [g, w] : map) {
    if (!group.group.presentation().has_generator(g)) {
      throw InputError(std::string(context) + ": '" + g.str() + "' is not a generator of " + group.id);
    }
  }
  return images;
}

Lowered lower_node(const ExprNode& node, VKForm form) {
  const std::string where = "node " + node.id;
  switch (node.kind) {
    case ExprKind::atom: {
      Lowered out{node.atom.group.presentation().retagged(node.atom.id), {}};
      for (const auto& g : node.atom.group.presentation().generators()) {
        out.atoms.emplace(g.retagged(node.atom.id), Word::generator(g.retagged(node.atom.id)));
      }
      return out;
    }
    case ExprKind::free_group: {
      if (node.rank < 0) throw InputError(where + ": negative free rank");
      return {Presentation::free(node.rank, node.tag), {}};
    }
    case ExprKind::coproduct: {
      Lowered out;
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        const std::string tag = "c" + std::to_string(k + 1);
        Lowered child = lower_node(*node.children[k], form);
        out.presentation = free_product(out.presentation, child.presentation.retagged(tag));
        merge_first(out.atoms, retag_values(child.atoms, tag));
      }
      return out;
    }
    case ExprKind::fibered_coproduct: {
      if (node.children.size() != node.base_maps.size()) {
        throw InputError(where + ": one base map per operand is required");
      }
      Lowered out;
      std::vector<std::map<GeneratorSymbol, Word>> images;
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        const std::string tag = "f" + std::to_string(k + 1);
        Lowered child = lower_node(*node.children[k], form);
        auto child_atoms = retag_values(child.atoms, tag);
        images.push_back(leg_images(node.atom, node.base_maps[k], child_atoms, where));
        out.presentation = free_product(out.presentation, child.presentation.retagged(tag));
        merge_first(out.atoms, child_atoms);
      }
      std::vector<std::pair<Word, Word>> pairs;
      for (std::size_t k = 1; k < images.size(); ++k) {
        for (const auto& g : node.atom.group.presentation().generators()) {
          pairs.emplace_back(images[0].at(g), images[k].at(g));
        }
      }
      out.presentation = quotient_by_relations(out.presentation, pairs);
      return out;
    }
    case ExprKind::quotient: {
      if (node.children.size() != 1) throw InputError(where + ": a quotient has exactly one operand");
      Lowered out = lower_node(*node.children.front(), form);
      std::vector<std::pair<Word, Word>> pairs;
      for (const auto& [f, g] : node.relations) {
        pairs.emplace_back(resolve(f, out.atoms, where), resolve(g, out.atoms, where));
      }
      out.presentation = quotient_by_relations(out.presentation, pairs);
      return out;
    }
    case ExprKind::vk: {
      if (node.children.size() != 2) throw InputError(where + ": a VK node has two operands");
      if (node.legs.empty()) throw InputError(where + ": a VK node needs at least one leg");
      const Lowered pi = lower_node(*node.children[0], form);
      const Lowered pi_prime = lower_node(*node.children[1], form);
      VKData data{pi.presentation, pi_prime.presentation, {}};
      for (const auto& leg : node.legs) {
        const Presentation& k = leg.group.group.presentation();
        data.legs.push_back({k, Homo::into(k, pi.presentation, leg_images(leg.group, leg.psi, pi.atoms, where)),
                             Homo::into(k, pi_prime.presentation,
                                        leg_images(leg.group, leg.phi, pi_prime.atoms, where))});
      }
      VKGroup group = vk_build(data, form);
      Lowered out{std::move(group.presentation), compose_values(pi.atoms, group.pi_embedding)};
      merge_first(out.atoms, compose_values(pi_prime.atoms, group.pi_prime_embedding));
      return out;
    }
  }
  throw InternalError("unhandled expression kind");
}

}  // namespace

std::string to_string(AtomRole role) {
  switch (role) {
    case AtomRole::component: return "component";
    case AtomRole::singular: return "singular";
    case AtomRole::branch: return "branch";
    case AtomRole::piece: return "piece";
  }
  return "?";
}

AtomRole parse_atom_role(std::string_view text) {
  for (AtomRole r : {AtomRole::component, AtomRole::singular, AtomRole::branch, AtomRole::piece}) {
    if (to_string(r) == text) return r;
  }
  throw InputError("unknown atom role '" + std::string(text) + "'");
}

std::string to_string(ExprKind kind) {
  switch (kind) {
    case ExprKind::atom: return "atom";
    case ExprKind::free_group: return "free";
    case ExprKind::coproduct: return "coproduct";
    case ExprKind::fibered_coproduct: return "fibered-coproduct";
    case ExprKind::quotient: return "quotient";
    case ExprKind::vk: return "vk";
  }
  return "?";
}

ExprKind parse_expr_kind(std::string_view text) {
  for (ExprKind k : {ExprKind::atom, ExprKind::free_group, ExprKind::coproduct, ExprKind::fibered_coproduct,
                     ExprKind::quotient, ExprKind::vk}) {
    if (to_string(k) == text) return k;
  }
  throw InputError("unknown expression kind '" + std::string(text) + "'");
}

bool ExprNode::operator==(const ExprNode& rhs) const {
  if (kind != rhs.kind || id != rhs.id || atom != rhs.atom || rank != rhs.rank || tag != rhs.tag ||
      base_maps != rhs.base_maps || relations != rhs.relations || legs != rhs.legs ||
      children.size() != rhs.children.size()) {
    return false;
  }
  for (std::size_t k = 0; k < children.size(); ++k) {
    if (!same_expression(children[k], rhs.children[k])) return false;
  }
  return true;
}

bool same_expression(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

std::string ExpressionBuilder::next_id() { return "n" + std::to_string(counter_++); }

Expr ExpressionBuilder::atom(AtomRef ref) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::atom;
  n->id = next_id();
  n->atom = std::move(ref);
  return n;
}

Expr ExpressionBuilder::free_group(int rank, std::string tag) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::free_group;
  n->id = next_id();
  n->rank = rank;
  n->tag = std::move(tag);
  return n;
}

Expr ExpressionBuilder::coproduct(std::vector<Expr> children) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::coproduct;
  n->id = next_id();
  n->children = std::move(children);
  return n;
}

Expr ExpressionBuilder::fibered_coproduct(AtomRef base, std::vector<Expr> children,
                                          std::vector<AtomMap> base_maps) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::fibered_coproduct;
  n->id = next_id();
  n->atom = std::move(base);
  n->children = std::move(children);
  n->base_maps = std::move(base_maps);
  return n;
}

Expr ExpressionBuilder::quotient(Expr child, std::vector<std::pair<Word, Word>> relations) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::quotient;
  n->id = next_id();
  n->children = {std::move(child)};
  n->relations = std::move(relations);
  return n;
}

Expr ExpressionBuilder::vk(Expr pi, Expr pi_prime, std::vector<ExprLeg> legs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::vk;
  n->id = next_id();
  n->children = {std::move(pi), std::move(pi_prime)};
  n->legs = std::move(legs);
  return n;
}

Word atom_word(std::string_view atom_id, const GeneratorSymbol& g) {
  return Word::generator(g.retagged(atom_id));
}

Lowered lower(const Expr& expr, VKForm form) {
  if (!expr) throw InputError("cannot lower an empty expression");
  return lower_node(*expr, form);
}

namespace {

void witness_node(const ExprNode& node, WitnessTrace& trace) {
  for (const auto& c : node.children) {
    if (!c) {
      trace.steps.push_back({node.id, to_string(node.kind), "missing operand", false});
      continue;
    }
    witness_node(*c, trace);
  }
  WitnessStep step{node.id, to_string(node.kind), "", true};
  switch (node.kind) {
    case ExprKind::atom:
      switch (node.atom.role) {
        case AtomRole::component:
        case AtomRole::piece:
          step.rule = "etale fundamental group of a normal scheme";
          break;
        case AtomRole::singular:
        case AtomRole::branch:
          step.rule = "fundamental group of a lower-dimensional stratum, admitted inductively";
          break;
      }
      break;
    case ExprKind::free_group:
      step.rule = "discrete free group";
      step.admitted = node.rank >= 0;
      break;
    case ExprKind::coproduct:
      step.rule = "closed under coproducts";
      step.admitted = !node.children.empty();
      break;
    case ExprKind::fibered_coproduct:
      step.rule = "closed under fibred coproducts";
      step.admitted = !node.children.empty() && node.children.size() == node.base_maps.size();
      break;
    case ExprKind::quotient:
      step.rule = "closed under quotients";
      step.admitted = node.children.size() == 1;
      break;
    case ExprKind::vk:
      step.rule = "closed under VK groups (coproduct with a free group, then quotient)";
      step.admitted = node.children.size() == 2 && !node.legs.empty();
      break;
  }
  if (!step.admitted) step.rule = "malformed " + to_string(node.kind) + " node";
  trace.steps.push_back(std::move(step));
}

}  // namespace

WitnessTrace class_witness(const Expr& expr) {
  WitnessTrace trace;
  if (!expr) {
    trace.admitted = false;
    trace.failure = "empty expression";
    return trace;
  }
  witness_node(*expr, trace);
  for (const auto& s : trace.steps) {
    if (!s.admitted) {
      trace.admitted = false;
      trace.failure = "node " + s.node + ": " + s.rule;
      break;
    }
  }
  return trace;
}

std::size_t expression_size(const Expr& expr) {
  if (!expr) return 0;
  std::size_t n = 1;
  for (const auto& c : expr->children) n += expression_size(c);
  return n;
}

std::size_t expression_depth(const Expr& expr) {
  if (!expr) return 0;
  std::size_t d = 0;
  for (const auto& c : expr->children) d = std::max(d, expression_depth(c));
  return d + 1;
}

}  // namespace noohi
