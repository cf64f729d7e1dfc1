#include "noohi/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "noohi/errors.hpp"

namespace noohi {

namespace {

/// Incidence multigraph: components first, then singulars.
struct Incidence {
  std::vector<std::string> vertex_ids;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Incidence incidence(const SchemeConfig& cfg) {
  Incidence g;
  for (const auto& c : cfg.components) {
    g.index.emplace(c.id, g.vertex_ids.size());
    g.vertex_ids.push_back(c.id);
  }
  for (const auto& s : cfg.singulars) {
    g.index.emplace(s.id, g.vertex_ids.size());
    g.vertex_ids.push_back(s.id);
  }
  for (const auto& b : cfg.branches) {
    auto ci = g.index.find(b.component);
    auto si = g.index.find(b.singular);
    if (ci != g.index.end() && si != g.index.end()) g.edges.emplace_back(ci->second, si->second);
  }
  return g;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Vertices not reachable from vertex 0.
std::vector<std::string> unreachable(const SchemeConfig& cfg) {
  const Incidence g = incidence(cfg);
  if (g.vertex_ids.empty()) return {};
  UnionFind uf(g.vertex_ids.size());
  for (auto [a, b] : g.edges) uf.unite(a, b);
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.vertex_ids.size(); ++v) {
    if (uf.find(v) != uf.find(0)) out.push_back(g.vertex_ids[v]);
  }
  return out;
}

bool valid_identifier(const std::string& id) {
  return !id.empty() && id.find('.') == std::string::npos && id.find('/') == std::string::npos;
}

std::vector<std::string> components_of_singular(const SchemeConfig& cfg, std::string_view j) {
  std::set<std::string> touched;
  for (const auto& b : cfg.branches) {
    if (b.singular == j) touched.insert(b.component);
  }
  std::vector<std::string> out;
  for (const auto& c : cfg.components) {
    if (touched.count(c.id)) out.push_back(c.id);
  }
  return out;
}

}  // namespace

SchemeConfig& SchemeConfig::add_component(std::string id, GroupSpec group) {
  components.push_back({std::move(id), std::move(group)});
  return *this;
}

SchemeConfig& SchemeConfig::add_singular(std::string id, GroupSpec group) {
  singulars.push_back({std::move(id), std::move(group)});
  return *this;
}

SchemeConfig& SchemeConfig::add_branch(std::string id, std::string comp, std::string sing, GroupSpec group,
                                       std::map<GeneratorSymbol, Word> psi,
                                       std::map<GeneratorSymbol, Word> phi) {
  if (!has_component(comp)) throw InputError("branch '" + id + "': unknown component '" + comp + "'");
  if (!has_singular(sing)) throw InputError("branch '" + id + "': unknown singular '" + sing + "'");
  auto default_images = [&](std::map<GeneratorSymbol, Word>& images) {
    if (!images.empty()) return;
    for (const auto& g : group.presentation().generators()) images[g] = Word{};
  };
  default_images(psi);
  default_images(phi);
  Homo psi_h = Homo::between(group, component(comp).group, std::move(psi));
  Homo phi_h = Homo::between(group, singular(sing).group, std::move(phi));
  branches.push_back({std::move(id), std::move(comp), std::move(sing), std::move(group), std::move(psi_h),
                      std::move(phi_h)});
  return *this;
}

const Component& SchemeConfig::component(std::string_view id) const {
  for (const auto& c : components) {
    if (c.id == id) return c;
  }
  throw InputError("unknown component '" + std::string(id) + "'");
}

const Singular& SchemeConfig::singular(std::string_view id) const {
  for (const auto& s : singulars) {
    if (s.id == id) return s;
  }
  throw InputError("unknown singular '" + std::string(id) + "'");
}

bool SchemeConfig::has_component(std::string_view id) const {
  return std::any_of(components.begin(), components.end(), [&](const Component& c) { return c.id == id; });
}

bool SchemeConfig::has_singular(std::string_view id) const {
  return std::any_of(singulars.begin(), singulars.end(), [&](const Singular& s) { return s.id == id; });
}

std::vector<const Branch*> SchemeConfig::branches_of_component(std::string_view id) const {
  std::vector<const Branch*> out;
  for (const auto& b : branches) {
    if (b.component == id) out.push_back(&b);
  }
  return out;
}

std::vector<const Branch*> SchemeConfig::branches_of_singular(std::string_view id) const {
  std::vector<const Branch*> out;
  for (const auto& b : branches) {
    if (b.singular == id) out.push_back(&b);
  }
  return out;
}

bool SchemeConfig::zero_dimensional_singularities() const {
  return std::all_of(singulars.begin(), singulars.end(), [](const Singular& s) { return s.group.is_trivial(); }) &&
         std::all_of(branches.begin(), branches.end(), [](const Branch& b) { return b.group.is_trivial(); });
}

ValidationResult validate(const SchemeConfig& cfg) {
  auto fail = [](std::string invariant, std::vector<std::string> ids, std::string message) {
    return ValidationResult{Diagnostic{std::move(invariant), std::move(ids), std::move(message)}};
  };

  std::set<std::string> ids;
  auto check_id = [&](const std::string& id) { return valid_identifier(id) && ids.insert(id).second; };
  for (const auto& c : cfg.components) {
    if (!check_id(c.id)) return fail("unique-ids", {c.id}, "identifier '" + c.id + "' is invalid or repeated");
  }
  for (const auto& s : cfg.singulars) {
    if (!check_id(s.id)) return fail("unique-ids", {s.id}, "identifier '" + s.id + "' is invalid or repeated");
  }
  for (const auto& b : cfg.branches) {
    if (!check_id(b.id)) return fail("unique-ids", {b.id}, "identifier '" + b.id + "' is invalid or repeated");
  }
  if (cfg.components.empty()) return fail("has-component", {}, "at least one component is required");

  for (const auto& b : cfg.branches) {
    if (!cfg.has_component(b.component)) {
      return fail("references-resolve", {b.id, b.component}, "branch '" + b.id + "' names unknown component '" + b.component + "'");
    }
    if (!cfg.has_singular(b.singular)) {
      return fail("references-resolve", {b.id, b.singular}, "branch '" + b.id + "' names unknown singular '" + b.singular + "'");
    }
  }

  for (const auto& s : cfg.singulars) {
    if (cfg.branches_of_singular(s.id).empty()) {
      return fail("singular-has-branch", {s.id}, "singular '" + s.id + "' has no branch");
    }
  }
  if (!(cfg.n() == 1 && cfg.m() == 0)) {
    auto lost = unreachable(cfg);
    if (!lost.empty()) {
      return fail("connected", lost,
                  "incidence graph is disconnected; '" + lost.front() + "' is not reachable from '" +
                      cfg.components.front().id + "'");
    }
  }
  if (cfg.n() > 1) {
    for (const auto& c : cfg.components) {
      if (cfg.branches_of_component(c.id).empty()) {
        return fail("component-has-branch", {c.id}, "component '" + c.id + "' has no branch");
      }
    }
  }
  for (const auto& b : cfg.branches) {
    if (b.psi.source() != b.group.presentation() || b.psi.target() != cfg.component(b.component).group.presentation() ||
        b.phi.source() != b.group.presentation() || b.phi.target() != cfg.singular(b.singular).group.presentation()) {
      return fail("branch-maps", {b.id}, "maps of branch '" + b.id + "' do not match its groups");
    }
  }
  return {};
}

void require_valid(const SchemeConfig& cfg) {
  auto r = validate(cfg);
  if (!r.ok()) throw PreconditionError("invalid configuration (" + r.diagnostic->invariant + "): " + r.diagnostic->message);
}

bool incidence_connected(const SchemeConfig& cfg) {
  return !cfg.components.empty() && unreachable(cfg).empty();
}

SubConfig restrict_to_singulars(const SchemeConfig& cfg, const std::vector<std::string>& singular_ids) {
  std::set<std::string> keep(singular_ids.begin(), singular_ids.end());
  for (const auto& j : keep) {
    if (!cfg.has_singular(j)) throw InputError("unknown singular '" + j + "'");
  }
  std::set<std::string> touched;
  for (const auto& b : cfg.branches) {
    if (keep.count(b.singular)) touched.insert(b.component);
  }
  SubConfig sub;
  sub.provenance.kind = "union";
  for (const auto& c : cfg.components) {
    if (touched.count(c.id)) {
      sub.config.components.push_back(c);
      sub.provenance.component_ids.push_back(c.id);
    }
  }
  for (const auto& s : cfg.singulars) {
    if (keep.count(s.id)) {
      sub.config.singulars.push_back(s);
      sub.provenance.singular_ids.push_back(s.id);
    }
  }
  for (const auto& b : cfg.branches) {
    if (keep.count(b.singular)) {
      sub.config.branches.push_back(b);
      sub.provenance.branch_ids.push_back(b.id);
    }
  }
  return sub;
}

SubConfig build_T(const SchemeConfig& cfg, std::string_view singular_id) {
  if (!cfg.has_singular(singular_id)) throw InputError("unknown singular '" + std::string(singular_id) + "'");
  SubConfig sub = restrict_to_singulars(cfg, {std::string(singular_id)});
  sub.provenance.kind = "T";
  sub.provenance.anchor = singular_id;
  return sub;
}

SubConfig build_T_complement(const SchemeConfig& cfg, std::string_view singular_id) {
  if (cfg.m() < 2) throw PreconditionError("complement of a T needs at least two singulars");
  if (!cfg.has_singular(singular_id)) throw InputError("unknown singular '" + std::string(singular_id) + "'");
  std::vector<std::string> rest;
  for (const auto& s : cfg.singulars) {
    if (s.id != singular_id) rest.push_back(s.id);
  }
  SubConfig sub = restrict_to_singulars(cfg, rest);
  sub.provenance.kind = "T-complement";
  sub.provenance.anchor = singular_id;
  return sub;
}

bool is_valid_devissage_order(const SchemeConfig& cfg, const std::vector<std::string>& order) {
  std::vector<std::string> declared;
  for (const auto& s : cfg.singulars) declared.push_back(s.id);
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::sort(declared.begin(), declared.end());
  if (sorted != declared) return false;
  std::vector<std::string> prefix;
  for (const auto& j : order) {
    prefix.push_back(j);
    if (!incidence_connected(restrict_to_singulars(cfg, prefix).config)) return false;
  }
  return true;
}

std::vector<std::string> devissage_order(const SchemeConfig& cfg) {
  if (cfg.m() == 0) throw PreconditionError("no singular components to order");
  std::vector<std::string> order{cfg.singulars.front().id};
  std::vector<bool> used(cfg.m(), false);
  used[0] = true;
  auto covered_list = components_of_singular(cfg, order.front());
  std::set<std::string> covered(covered_list.begin(), covered_list.end());
  while (order.size() < cfg.m()) {
    bool found = false;
    for (std::size_t j = 0; j < cfg.m() && !found; ++j) {
      if (used[j]) continue;
      auto comps = components_of_singular(cfg, cfg.singulars[j].id);
      if (std::none_of(comps.begin(), comps.end(), [&](const std::string& c) { return covered.count(c) > 0; })) {
        continue;
      }
      used[j] = true;
      order.push_back(cfg.singulars[j].id);
      covered.insert(comps.begin(), comps.end());
      found = true;
    }
    if (!found) throw PreconditionError("configuration is disconnected; no dévissage order exists");
  }
  if (!is_valid_devissage_order(cfg, order)) {
    throw InternalError("greedy dévissage order has a disconnected prefix");
  }
  return order;
}

std::vector<std::vector<std::string>> all_devissage_orders(const SchemeConfig& cfg) {
  if (cfg.m() > 8) throw ResourceError("too many singulars to enumerate orders", static_cast<double>(cfg.m()));
  std::vector<std::size_t> idx(cfg.m());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::vector<std::string>> out;
  do {
    std::vector<std::string> order;
    for (auto k : idx) order.push_back(cfg.singulars[k].id);
    if (is_valid_devissage_order(cfg, order)) out.push_back(std::move(order));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

IntersectionReport intersection(const SchemeConfig& cfg, const SubConfig& t, const SubConfig& complement) {
  if (t.provenance.kind != "T" || complement.provenance.kind != "T-complement" ||
      t.provenance.anchor != complement.provenance.anchor) {
    throw InputError("intersection: sub-configurations are not a T / complement pair for the same singular");
  }
  const std::string& k = t.provenance.anchor;
  if (build_T(cfg, k).provenance != t.provenance || build_T_complement(cfg, k).provenance != complement.provenance) {
    throw InputError("intersection: sub-configurations were not cut from this configuration");
  }
  IntersectionReport r;
  r.anchor = k;
  r.s1 = t.provenance.component_ids;
  r.s2 = complement.provenance.component_ids;
  std::set<std::string> in2(r.s2.begin(), r.s2.end());
  for (const auto& c : cfg.components) {
    if (std::find(r.s1.begin(), r.s1.end(), c.id) != r.s1.end() && in2.count(c.id)) {
      r.s.push_back(c.id);
      r.pieces.push_back(c);
    }
  }
  r.m1 = t.config.branch_count();
  r.m2 = cfg.branch_count() - r.m1;
  if (r.m2 != complement.config.branch_count()) throw InternalError("branch counts of the split do not add up");
  return r;
}

long cycle_rank(const SchemeConfig& cfg) {
  const Incidence g = incidence(cfg);
  UnionFind uf(g.vertex_ids.size());
  long closing = 0;
  for (auto [a, b] : g.edges) {
    if (!uf.unite(a, b)) ++closing;
  }
  return closing;
}

long free_rank(const SchemeConfig& cfg) {
  if (!(cfg.n() == 1 && cfg.m() == 0) && !incidence_connected(cfg)) {
    throw PreconditionError("free rank needs a connected configuration");
  }
  if (cfg.n() == 0) throw PreconditionError("free rank needs at least one component");
  const long rank = static_cast<long>(cfg.branch_count()) - static_cast<long>(cfg.m()) -
                    static_cast<long>(cfg.n()) + 1;
  if (rank != cycle_rank(cfg)) throw InternalError("free rank differs from the cycle rank");
  return rank;
}

DevissagePlan plan_devissage(const SchemeConfig& cfg, std::optional<std::vector<std::string>> order) {
  require_valid(cfg);
  if (cfg.m() == 0) throw PreconditionError("regular scheme, nothing to plan");
  DevissagePlan plan;
  if (order) {
    if (!is_valid_devissage_order(cfg, *order)) throw PreconditionError("the given dévissage order is not valid");
    plan.order = *order;
  } else {
    plan.order = devissage_order(cfg);
  }
  SchemeConfig current = cfg;
  std::vector<std::string> remaining = plan.order;
  while (current.m() >= 2) {
    SplitStep step;
    step.anchor = remaining.back();
    step.t = build_T(current, step.anchor);
    step.complement = build_T_complement(current, step.anchor);
    step.intersection = intersection(current, step.t, step.complement);
    step.rank_whole = free_rank(current);
    step.rank_t = free_rank(step.t.config);
    step.rank_complement = free_rank(step.complement.config);
    step.additive = step.rank_whole ==
                    step.rank_t + step.rank_complement + static_cast<long>(step.intersection.d()) - 1;
    current = step.complement.config;
    remaining.pop_back();
    plan.splits.push_back(std::move(step));
  }
  return plan;
}

}  // namespace noohi
