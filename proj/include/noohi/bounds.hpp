#ifndef NOOHI_BOUNDS_HPP
#define NOOHI_BOUNDS_HPP

#include <cstdint>

namespace noohi {

/// Enumeration limits shared by every module.
struct Bounds {
  /// Largest order accepted for a finite group given by generators.
  std::uint64_t max_group_order = 5040;
  /// Largest symmetric-group degree used for hom counting.
  int max_degree = 5;
  /// Largest number of search nodes / candidate tuples explored.
  std::uint64_t ceiling = 100'000'000;
};

/// Hard upper limit for `Bounds::max_degree` (multiplication tables of
/// Sym(d) are precomputed).
inline constexpr int kHardMaxDegree = 6;

}  // namespace noohi

#endif
