#include "noohi/pi1.hpp"

#include "noohi/errors.hpp"
#include "noohi/tietze.hpp"

namespace noohi {

namespace {

AtomRef component_atom(const Component& c) { return {c.id, AtomRole::component, c.group}; }
AtomRef singular_atom(const Singular& s) { return {s.id, AtomRole::singular, s.group}; }

/// psi/phi of a branch, moved into atom coordinates of the component and singular.
ExprLeg branch_leg(const Branch& b) {
  ExprLeg leg{{b.id, AtomRole::branch, b.group}, {}, {}};
  const std::map<GeneratorSymbol, Word> to_component = [&] {
    std::map<GeneratorSymbol, Word> e;
    for (const auto& g : b.psi.target().generators()) e[g] = atom_word(b.component, g);
    return e;
  }();
  const std::map<GeneratorSymbol, Word> to_singular = [&] {
    std::map<GeneratorSymbol, Word> e;
    for (const auto& g : b.phi.target().generators()) e[g] = atom_word(b.singular, g);
    return e;
  }();
  for (const auto& [a, w] : b.psi.images()) leg.psi[a] = w.substituted(to_component);
  for (const auto& [a, w] : b.phi.images()) leg.phi[a] = w.substituted(to_singular);
  return leg;
}

AtomMap identity_map(const AtomRef& atom) {
  AtomMap m;
  for (const auto& g : atom.group.presentation().generators()) m[g] = atom_word(atom.id, g);
  return m;
}

Expr connected_expr(const SchemeConfig& cfg, ExpressionBuilder& builder, std::vector<DerivationEntry>& log) {
  if (cfg.m() != 1) {
    throw PreconditionError("the connected route needs exactly one singular component (m = " +
                            std::to_string(cfg.m()) + ")");
  }
  const Singular& z = cfg.singulars.front();
  const AtomRef base = singular_atom(z);
  std::vector<Expr> per_component;
  std::vector<AtomMap> base_maps;
  std::vector<std::string> inputs{z.id};
  for (const auto& c : cfg.components) {
    std::vector<ExprLeg> legs;
    for (const Branch* b : cfg.branches_of_component(c.id)) {
      legs.push_back(branch_leg(*b));
      inputs.push_back(b->id);
    }
    if (legs.empty()) throw PreconditionError("component '" + c.id + "' does not meet '" + z.id + "'");
    per_component.push_back(builder.vk(builder.atom(component_atom(c)), builder.atom(base), std::move(legs)));
    base_maps.push_back(identity_map(base));
    inputs.push_back(c.id);
  }
  Expr out = per_component.size() == 1
                 ? per_component.front()
                 : builder.fibered_coproduct(base, std::move(per_component), std::move(base_maps));
  log.push_back({"connected-singular-locus", out->id, std::move(inputs)});
  return out;
}

Expr devissage_expr(const SchemeConfig& cfg, const std::vector<std::string>& order, ExpressionBuilder& builder,
                    std::vector<DerivationEntry>& log) {
  if (cfg.m() == 0) {
    Expr out = builder.atom(component_atom(cfg.components.front()));
    log.push_back({"regular", out->id, {cfg.components.front().id}});
    return out;
  }
  if (cfg.m() == 1) return connected_expr(cfg, builder, log);

  const std::string& k = order.back();
  const SubConfig t = build_T(cfg, k);
  const SubConfig rest = build_T_complement(cfg, k);
  const IntersectionReport overlap = intersection(cfg, t, rest);
  const std::vector<std::string> prefix(order.begin(), order.end() - 1);

  Expr left = devissage_expr(t.config, {k}, builder, log);
  Expr right = devissage_expr(rest.config, prefix, builder, log);
  std::vector<ExprLeg> legs;
  for (const auto& piece : overlap.pieces) {
    ExprLeg leg{{"D:" + piece.id, AtomRole::piece, piece.group}, {}, {}};
    leg.psi = identity_map({piece.id, AtomRole::component, piece.group});
    leg.phi = leg.psi;
    legs.push_back(std::move(leg));
  }
  if (legs.empty()) throw InternalError("split along '" + k + "' has an empty overlap");
  Expr out = builder.vk(left, right, std::move(legs));
  std::vector<std::string> inputs{k, left->id, right->id};
  for (const auto& id : overlap.s) inputs.push_back("D:" + id);
  log.push_back({"devissage", out->id, std::move(inputs)});
  return out;
}

}  // namespace

bool Pi1Result::operator==(const Pi1Result& rhs) const {
  return same_expression(expression, rhs.expression) && lowered == rhs.lowered &&
         presentation == rhs.presentation && derivation == rhs.derivation && form == rhs.form &&
         simplified == rhs.simplified;
}

Pi1Result finish_result(Expr expression, std::vector<DerivationEntry> derivation, const Pi1Options& options) {
  Pi1Result r;
  r.lowered = lower(expression, options.form).presentation;
  r.presentation = options.simplify ? tietze_simplify(r.lowered) : r.lowered;
  r.expression = std::move(expression);
  r.derivation = std::move(derivation);
  r.form = options.form;
  r.simplified = options.simplify;
  return r;
}

Pi1Result pi1_connected_singular(const SchemeConfig& cfg, const Pi1Options& options) {
  require_valid(cfg);
  ExpressionBuilder builder;
  std::vector<DerivationEntry> log;
  Expr e = connected_expr(cfg, builder, log);
  return finish_result(std::move(e), std::move(log), options);
}

Pi1Result pi1_devissage(const SchemeConfig& cfg, const Pi1Options& options) {
  require_valid(cfg);
  std::vector<std::string> order;
  if (cfg.m() > 0) {
    if (options.order) {
      if (!is_valid_devissage_order(cfg, *options.order)) {
        throw PreconditionError("the given dévissage order is not valid for this configuration");
      }
      order = *options.order;
    } else {
      order = devissage_order(cfg);
    }
  }
  ExpressionBuilder builder;
  std::vector<DerivationEntry> log;
  Expr e = devissage_expr(cfg, order, builder, log);
  return finish_result(std::move(e), std::move(log), options);
}

Pi1Result pi1_closed_form(const SchemeConfig& cfg, bool require_trivial_singulars, const Pi1Options& options) {
  require_valid(cfg);
  if (require_trivial_singulars) {
    for (const auto& s : cfg.singulars) {
      if (!s.group.is_trivial()) {
        throw PreconditionError("closed form needs trivial singular groups; '" + s.id + "' has group " +
                                s.group.describe());
      }
    }
    for (const auto& b : cfg.branches) {
      if (!b.group.is_trivial()) {
        throw PreconditionError("closed form needs trivial branch groups; '" + b.id + "' has group " +
                                b.group.describe());
      }
    }
  }
  const long rank = free_rank(cfg);
  ExpressionBuilder builder;
  std::vector<Expr> factors;
  std::vector<std::string> inputs;
  for (const auto& c : cfg.components) {
    inputs.push_back(c.id);
    if (!c.group.is_trivial()) factors.push_back(builder.atom(component_atom(c)));
  }
  inputs.push_back("rank=" + std::to_string(rank));
  if (rank > 0) factors.push_back(builder.free_group(static_cast<int>(rank)));
  Expr e;
  if (factors.empty()) {
    e = builder.atom(component_atom(cfg.components.front()));
  } else if (factors.size() == 1) {
    e = factors.front();
  } else {
    e = builder.coproduct(std::move(factors));
  }
  std::vector<DerivationEntry> log{{"closed-form", e->id, std::move(inputs)}};
  return finish_result(std::move(e), std::move(log), options);
}

std::string to_string(Route r) {
  switch (r) {
    case Route::automatic: return "auto";
    case Route::connected: return "connected";
    case Route::devissage: return "devissage";
    case Route::closed: return "closed";
  }
  return "?";
}

Route parse_route(std::string_view text) {
  for (Route r : {Route::automatic, Route::connected, Route::devissage, Route::closed}) {
    if (to_string(r) == text) return r;
  }
  throw InputError("unknown route '" + std::string(text) + "' (expected auto, connected, devissage or closed)");
}

Pi1Result compute_pi1(const SchemeConfig& cfg, Route route, const Pi1Options& options) {
  switch (route) {
    case Route::automatic:
      require_valid(cfg);
      return cfg.zero_dimensional_singularities() ? pi1_closed_form(cfg, true, options)
                                                  : pi1_devissage(cfg, options);
    case Route::connected: return pi1_connected_singular(cfg, options);
    case Route::devissage: return pi1_devissage(cfg, options);
    case Route::closed: return pi1_closed_form(cfg, true, options);
  }
  throw InternalError("unhandled route");
}

}  // namespace noohi
