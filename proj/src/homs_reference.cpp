#include <cmath>

#include "noohi/errors.hpp"
#include "noohi/homs.hpp"

namespace noohi::reference {

namespace {

template <typename Accept>
std::uint64_t odometer(const Presentation& p, int d, const Bounds& bounds, Accept accept) {
  if (d < 1 || d > bounds.max_degree || d > kHardMaxDegree) {
    throw InputError("degree " + std::to_string(d) + " out of range");
  }
  const auto& sym = SymmetricGroup::of(d);
  const double space = std::pow(static_cast<double>(sym.order()), static_cast<double>(p.rank()));
  if (space > static_cast<double>(bounds.ceiling)) {
    throw ResourceError("reference enumeration of " + std::to_string(space) +
                            " tuples exceeds the ceiling",
                        space);
  }
  std::vector<SymIndex> images(p.rank(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators()) {
      if (evaluate_word(sym, p, images, r) != SymmetricGroup::identity()) {
        ok = false;
        break;
      }
    }
    if (ok && accept(sym, images)) ++count;
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == sym.order()) images[k++] = 0;
    if (k == images.size()) break;
  }
  return count;
}

}  // namespace

std::uint64_t count_homs(const Presentation& p, int d, const Bounds& bounds) {
  return odometer(p, d, bounds, [](const SymmetricGroup&, const std::vector<SymIndex>&) { return true; });
}

std::uint64_t count_transitive_homs(const Presentation& p, int d, const Bounds& bounds) {
  return odometer(p, d, bounds, [](const SymmetricGroup& sym, const std::vector<SymIndex>& img) {
    return is_transitive(sym, img);
  });
}

}  // namespace noohi::reference
