#ifndef NOOHI_ORACLE_DETAIL_HPP
#define NOOHI_ORACLE_DETAIL_HPP

// Shared set-up of the descent-data enumerations (not installed).

#include <vector>

#include "noohi/oracle.hpp"

namespace noohi::detail {

struct PreparedBranch {
  std::size_t component = 0;
  std::size_t singular = 0;
  /// psi(a) and phi(a) for each generator a of the branch group.
  std::vector<Word> psi;
  std::vector<Word> phi;
};

struct PreparedConfig {
  int degree = 0;
  const SymmetricGroup* sym = nullptr;
  const SchemeConfig* cfg = nullptr;
  std::vector<std::vector<std::vector<SymIndex>>> component_homs;
  std::vector<std::vector<std::vector<SymIndex>>> singular_homs;
  std::vector<PreparedBranch> branches;

  /// Images of psi_b(a) under rho, one per generator a.
  std::vector<SymIndex> psi_images(std::size_t b, const std::vector<SymIndex>& rho) const;
  std::vector<SymIndex> phi_images(std::size_t b, const std::vector<SymIndex>& tau) const;
};

/// Validates the configuration, checks the search estimate against the
/// ceiling and lists every action of every vertex group.
PreparedConfig prepare(const SchemeConfig& cfg, int d, const Bounds& bounds);

/// lambda x lambda^-1 == y for every listed pair.
inline bool intertwines(const SymmetricGroup& sym, SymIndex lambda, const std::vector<SymIndex>& x,
                        const std::vector<SymIndex>& y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sym.mul(lambda, x[k]) != sym.mul(y[k], lambda)) return false;
  }
  return true;
}

/// Union-find over (vertex, point) pairs for one choice of vertex actions;
/// `connected_with` adds the branch bijections.
class CoverGraph {
 public:
  CoverGraph(const PreparedConfig& p, const std::vector<const std::vector<SymIndex>*>& rho,
             const std::vector<const std::vector<SymIndex>*>& tau);

  bool connected_with(const PreparedConfig& p, const std::vector<SymIndex>& lambda) const;

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace noohi::detail

#endif
