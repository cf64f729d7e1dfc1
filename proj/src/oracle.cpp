#include "noohi/oracle.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include "noohi/errors.hpp"
#include "noohi/homs.hpp"
#include "oracle_detail.hpp"

namespace noohi {

namespace detail {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return false;
  parent[b] = a;
  return true;
}

std::size_t index_in(const std::vector<Component>& v, const std::string& id) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].id == id) return k;
  }
  throw InternalError("unresolved component '" + id + "'");
}

std::size_t index_in(const std::vector<Singular>& v, const std::string& id) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].id == id) return k;
  }
  throw InternalError("unresolved singular '" + id + "'");
}

}  // namespace

std::vector<SymIndex> PreparedConfig::psi_images(std::size_t b, const std::vector<SymIndex>& rho) const {
  const auto& br = branches[b];
  const Presentation& p = cfg->components[br.component].group.presentation();
  std::vector<SymIndex> out;
  for (const auto& w : br.psi) out.push_back(evaluate_word(*sym, p, rho, w));
  return out;
}

std::vector<SymIndex> PreparedConfig::phi_images(std::size_t b, const std::vector<SymIndex>& tau) const {
  const auto& br = branches[b];
  const Presentation& p = cfg->singulars[br.singular].group.presentation();
  std::vector<SymIndex> out;
  for (const auto& w : br.phi) out.push_back(evaluate_word(*sym, p, tau, w));
  return out;
}

PreparedConfig prepare(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  require_valid(cfg);
  if (d < 1 || d > bounds.max_degree || d > kHardMaxDegree) {
    throw InputError("degree " + std::to_string(d) + " is outside [1, " +
                     std::to_string(std::min(bounds.max_degree, kHardMaxDegree)) + "]");
  }
  const double estimate = descent_search_estimate(cfg, d, bounds);
  if (estimate > static_cast<double>(bounds.ceiling)) {
    throw ResourceError("descent-data search at degree " + std::to_string(d) + " would visit about " +
                            std::to_string(static_cast<long double>(estimate)) + " tuples (ceiling " +
                            std::to_string(bounds.ceiling) + ")",
                        estimate);
  }
  PreparedConfig p;
  p.degree = d;
  p.sym = &SymmetricGroup::of(d);
  p.cfg = &cfg;
  for (const auto& c : cfg.components) p.component_homs.push_back(all_homs(c.group.presentation(), d, bounds));
  for (const auto& s : cfg.singulars) p.singular_homs.push_back(all_homs(s.group.presentation(), d, bounds));
  for (const auto& b : cfg.branches) {
    PreparedBranch pb;
    pb.component = index_in(cfg.components, b.component);
    pb.singular = index_in(cfg.singulars, b.singular);
    for (const auto& a : b.group.presentation().generators()) {
      pb.psi.push_back(b.psi.image(a));
      pb.phi.push_back(b.phi.image(a));
    }
    p.branches.push_back(std::move(pb));
  }
  return p;
}

CoverGraph::CoverGraph(const PreparedConfig& p, const std::vector<const std::vector<SymIndex>*>& rho,
                       const std::vector<const std::vector<SymIndex>*>& tau) {
  const auto d = static_cast<std::size_t>(p.degree);
  const std::size_t vertices = rho.size() + tau.size();
  parent_.resize(vertices * d);
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  auto act = [&](std::size_t v, const std::vector<SymIndex>& images) {
    for (SymIndex g : images) {
      for (std::size_t x = 0; x < d; ++x) {
        unite(parent_, v * d + x, v * d + p.sym->apply(g, static_cast<std::uint16_t>(x)));
      }
    }
  };
  for (std::size_t i = 0; i < rho.size(); ++i) act(i, *rho[i]);
  for (std::size_t j = 0; j < tau.size(); ++j) act(rho.size() + j, *tau[j]);
}

bool CoverGraph::connected_with(const PreparedConfig& p, const std::vector<SymIndex>& lambda) const {
  const auto d = static_cast<std::size_t>(p.degree);
  const std::size_t n = p.component_homs.size();
  std::vector<std::size_t> parent = parent_;
  std::size_t classes = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) {
    if (find_root(parent, x) == x) ++classes;
  }
  for (std::size_t b = 0; b < lambda.size() && classes > 1; ++b) {
    const auto& br = p.branches[b];
    for (std::size_t x = 0; x < d; ++x) {
      const std::size_t y = p.sym->apply(lambda[b], static_cast<std::uint16_t>(x));
      if (unite(parent, br.component * d + x, (n + br.singular) * d + y)) --classes;
    }
  }
  return classes == 1;
}

}  // namespace detail

namespace {

using detail::PreparedConfig;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("descent-data count overflows 64 bits", 0.0);
  return r;
}

/// Decodes a flat index into one action per vertex group.
struct VertexChoice {
  std::vector<const std::vector<SymIndex>*> rho;
  std::vector<const std::vector<SymIndex>*> tau;
};

VertexChoice decode(const PreparedConfig& p, std::uint64_t index) {
  VertexChoice c;
  for (const auto& homs : p.component_homs) {
    c.rho.push_back(&homs[index % homs.size()]);
    index /= homs.size();
  }
  for (const auto& homs : p.singular_homs) {
    c.tau.push_back(&homs[index % homs.size()]);
    index /= homs.size();
  }
  return c;
}

std::uint64_t vertex_choices(const PreparedConfig& p) {
  std::uint64_t total = 1;
  for (const auto& h : p.component_homs) total = checked_mul(total, h.size());
  for (const auto& h : p.singular_homs) total = checked_mul(total, h.size());
  return total;
}

}  // namespace

double descent_search_estimate(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  double estimate = 1.0;
  for (const auto& c : cfg.components) estimate *= static_cast<double>(count_homs(c.group.presentation(), d, bounds));
  for (const auto& s : cfg.singulars) estimate *= static_cast<double>(count_homs(s.group.presentation(), d, bounds));
  estimate *= std::pow(static_cast<double>(factorial(d)), static_cast<double>(cfg.branch_count()));
  return estimate;
}

std::uint64_t rigid_count(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  const PreparedConfig p = detail::prepare(cfg, d, bounds);
  const auto& sym = *p.sym;
  const std::size_t order = sym.order();

  // admissible[b][r * |tau homs| + t]: number of bijections for branch b
  // intertwining component action r with singular action t.
  std::vector<std::vector<std::uint64_t>> admissible(p.branches.size());
  for (std::size_t b = 0; b < p.branches.size(); ++b) {
    const auto& rhos = p.component_homs[p.branches[b].component];
    const auto& taus = p.singular_homs[p.branches[b].singular];
    std::vector<std::vector<SymIndex>> ys;
    for (const auto& tau : taus) ys.push_back(p.phi_images(b, tau));
    auto& table = admissible[b];
    table.assign(rhos.size() * taus.size(), 0);
    const auto rows = static_cast<std::int64_t>(rhos.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < rows; ++r) {
      const auto xs = p.psi_images(b, rhos[static_cast<std::size_t>(r)]);
      for (std::size_t t = 0; t < taus.size(); ++t) {
        std::uint64_t count = 0;
        for (std::size_t l = 0; l < order; ++l) {
          if (detail::intertwines(sym, static_cast<SymIndex>(l), xs, ys[t])) ++count;
        }
        table[static_cast<std::size_t>(r) * taus.size() + t] = count;
      }
    }
  }

  std::vector<std::vector<std::size_t>> branches_at(p.component_homs.size());
  for (std::size_t b = 0; b < p.branches.size(); ++b) branches_at[p.branches[b].component].push_back(b);

  std::uint64_t tau_choices = 1;
  for (const auto& h : p.singular_homs) tau_choices = checked_mul(tau_choices, h.size());

  std::atomic<bool> overflow{false};
  unsigned __int128 total = 0;
  const auto outer = static_cast<std::int64_t>(tau_choices);
#pragma omp parallel
  {
    unsigned __int128 local = 0;
    std::vector<std::size_t> tau(p.singular_homs.size());
#pragma omp for schedule(dynamic)
    for (std::int64_t flat = 0; flat < outer; ++flat) {
      auto rest = static_cast<std::uint64_t>(flat);
      for (std::size_t j = 0; j < tau.size(); ++j) {
        tau[j] = rest % p.singular_homs[j].size();
        rest /= p.singular_homs[j].size();
      }
      unsigned __int128 product = 1;
      for (std::size_t i = 0; i < p.component_homs.size() && product != 0; ++i) {
        unsigned __int128 sum = 0;
        for (std::size_t r = 0; r < p.component_homs[i].size(); ++r) {
          unsigned __int128 term = 1;
          for (std::size_t b : branches_at[i]) {
            const std::size_t width = p.singular_homs[p.branches[b].singular].size();
            term *= admissible[b][r * width + tau[p.branches[b].singular]];
            if (term == 0) break;
          }
          sum += term;
        }
        product *= sum;
        if (product > std::numeric_limits<std::uint64_t>::max()) overflow = true;
      }
      local += product;
    }
#pragma omp critical
    total += local;
  }
  if (overflow || total > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("descent-data count overflows 64 bits", 0.0);
  }
  return static_cast<std::uint64_t>(total);
}

std::int64_t relabelling_order(int d, std::size_t k) {
  std::int64_t r = 1;
  const auto f = static_cast<std::int64_t>(factorial(d));
  for (std::size_t i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(r, f, &r)) throw ResourceError("relabelling group order overflows 64 bits", 0.0);
  }
  return r;
}

namespace {

Rational cardinality(std::uint64_t rigid, int d, std::size_t vertices) {
  if (rigid > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ResourceError("rigid count does not fit a 64-bit rational", static_cast<double>(rigid));
  }
  return Rational(static_cast<std::int64_t>(rigid), relabelling_order(d, vertices));
}

}  // namespace

Rational groupoid_cardinality(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  return cardinality(rigid_count(cfg, d, bounds), d, cfg.n() + cfg.m());
}

std::uint64_t connected_count(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  const PreparedConfig p = detail::prepare(cfg, d, bounds);
  const auto& sym = *p.sym;
  const std::uint64_t choices = vertex_choices(p);
  std::uint64_t total = 0;
  const auto outer = static_cast<std::int64_t>(choices);
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t flat = 0; flat < outer; ++flat) {
    const VertexChoice c = decode(p, static_cast<std::uint64_t>(flat));
    const detail::CoverGraph graph(p, c.rho, c.tau);
    // Admissible bijections per branch for this choice of actions.
    std::vector<std::vector<SymIndex>> candidates(p.branches.size());
    bool empty = false;
    for (std::size_t b = 0; b < p.branches.size() && !empty; ++b) {
      const auto xs = p.psi_images(b, *c.rho[p.branches[b].component]);
      const auto ys = p.phi_images(b, *c.tau[p.branches[b].singular]);
      for (std::size_t l = 0; l < sym.order(); ++l) {
        if (detail::intertwines(sym, static_cast<SymIndex>(l), xs, ys)) candidates[b].push_back(static_cast<SymIndex>(l));
      }
      empty = candidates[b].empty();
    }
    if (empty) continue;
    std::vector<std::size_t> pos(p.branches.size(), 0);
    std::vector<SymIndex> lambda(p.branches.size());
    while (true) {
      for (std::size_t b = 0; b < lambda.size(); ++b) lambda[b] = candidates[b][pos[b]];
      if (graph.connected_with(p, lambda)) ++total;
      std::size_t b = 0;
      while (b < pos.size() && ++pos[b] == candidates[b].size()) pos[b++] = 0;
      if (b == pos.size()) break;
    }
  }
  return total;
}

bool datum_connected(const SchemeConfig& cfg, const DescentDatum& datum) {
  detail::PreparedConfig p;
  p.degree = datum.degree;
  p.sym = &SymmetricGroup::of(datum.degree);
  p.cfg = &cfg;
  p.component_homs.resize(cfg.n());
  p.singular_homs.resize(cfg.m());
  for (const auto& b : cfg.branches) {
    detail::PreparedBranch pb;
    pb.component = detail::index_in(cfg.components, b.component);
    pb.singular = detail::index_in(cfg.singulars, b.singular);
    p.branches.push_back(std::move(pb));
  }
  std::vector<const std::vector<SymIndex>*> rho;
  std::vector<const std::vector<SymIndex>*> tau;
  for (const auto& r : datum.rho) rho.push_back(&r);
  for (const auto& t : datum.tau) tau.push_back(&t);
  return detail::CoverGraph(p, rho, tau).connected_with(p, datum.lambda);
}

OracleReport compare(const SchemeConfig& cfg, int d, const Pi1Result& result, const Bounds& bounds,
                     bool with_connected) {
  OracleReport r;
  r.degree = d;
  r.rigid_count = rigid_count(cfg, d, bounds);
  r.groupoid_cardinality = cardinality(r.rigid_count, d, cfg.n() + cfg.m());
  r.presentation_count = count_homs(result.presentation, d, bounds);
  const auto fact = static_cast<std::int64_t>(factorial(d));
  r.passed = r.groupoid_cardinality * fact == Rational(static_cast<std::int64_t>(r.presentation_count));
  if (with_connected) {
    ConnectedComparison c;
    c.connected_rigid = connected_count(cfg, d, bounds);
    c.cardinality = cardinality(c.connected_rigid, d, cfg.n() + cfg.m());
    c.transitive_count = count_transitive_homs(result.presentation, d, bounds);
    c.passed = c.cardinality * fact == Rational(static_cast<std::int64_t>(c.transitive_count));
    r.passed = r.passed && c.passed;
    r.connected = c;
  }
  return r;
}

}  // namespace noohi
