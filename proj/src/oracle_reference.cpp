#include "noohi/oracle.hpp"

#include "oracle_detail.hpp"

namespace noohi {

namespace {

using detail::PreparedConfig;

/// Depth-first walk over components, singulars, then branches. `leaf` is
/// called for every complete datum.
class DescentWalk {
 public:
  DescentWalk(const PreparedConfig& p, const std::function<void(const DescentDatum&)>& leaf)
      : p_(p), leaf_(leaf) {
    datum_.degree = p.degree;
    datum_.rho.resize(p.component_homs.size());
    datum_.tau.resize(p.singular_homs.size());
    datum_.lambda.resize(p.branches.size());
  }

  void run() { vertex(0); }

 private:
  void vertex(std::size_t v) {
    const std::size_t n = p_.component_homs.size();
    if (v == n + p_.singular_homs.size()) {
      branch(0);
      return;
    }
    const auto& homs = v < n ? p_.component_homs[v] : p_.singular_homs[v - n];
    for (const auto& h : homs) {
      (v < n ? datum_.rho[v] : datum_.tau[v - n]) = h;
      vertex(v + 1);
    }
  }

  void branch(std::size_t b) {
    if (b == p_.branches.size()) {
      leaf_(datum_);
      return;
    }
    const auto& br = p_.branches[b];
    const auto xs = p_.psi_images(b, datum_.rho[br.component]);
    const auto ys = p_.phi_images(b, datum_.tau[br.singular]);
    for (std::size_t l = 0; l < p_.sym->order(); ++l) {
      if (!detail::intertwines(*p_.sym, static_cast<SymIndex>(l), xs, ys)) continue;
      datum_.lambda[b] = static_cast<SymIndex>(l);
      branch(b + 1);
    }
  }

  const PreparedConfig& p_;
  const std::function<void(const DescentDatum&)>& leaf_;
  DescentDatum datum_;
};

}  // namespace

std::uint64_t enumerate_descent_data(const SchemeConfig& cfg, int d, const Bounds& bounds,
                                     const DatumVisitor& visit) {
  const PreparedConfig p = detail::prepare(cfg, d, bounds);
  std::uint64_t count = 0;
  const std::function<void(const DescentDatum&)> leaf = [&](const DescentDatum& datum) {
    ++count;
    if (visit) visit(datum);
  };
  DescentWalk(p, leaf).run();
  return count;
}

namespace reference {

std::uint64_t rigid_count(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  return enumerate_descent_data(cfg, d, bounds);
}

std::uint64_t connected_count(const SchemeConfig& cfg, int d, const Bounds& bounds) {
  std::uint64_t count = 0;
  enumerate_descent_data(cfg, d, bounds, [&](const DescentDatum& datum) {
    if (datum_connected(cfg, datum)) ++count;
  });
  return count;
}

}  // namespace reference

}  // namespace noohi
