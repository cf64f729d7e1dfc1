#ifndef NOOHI_PERM_HPP
#define NOOHI_PERM_HPP

#include <cstdint>
#include <ostream>
#include <vector>

namespace noohi {

/// Permutation of {0, ..., n-1} in image form: p[x] is the image of x.
using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::size_t degree);
/// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);
bool is_identity(const Perm& p);

/// Element list of the group generated by `gens`, identity first, in BFS order.
/// Stops and returns an empty vector once more than `limit` elements are found.
std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t degree,
                          std::uint64_t limit);

std::ostream& operator<<(std::ostream& os, const Perm& p);

/// Element index of Sym(d).
using SymIndex = std::uint16_t;

/// Sym(d) with precomputed multiplication and inverse tables, d <= 6.
/// Elements are indexed in lexicographic order of their image lists, so
/// index 0 is the identity.
class SymmetricGroup {
 public:
  /// Shared, lazily built instance; thread safe.
  static const SymmetricGroup& of(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  static constexpr SymIndex identity() noexcept { return 0; }

  SymIndex mul(SymIndex a, SymIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  SymIndex inv(SymIndex a) const noexcept { return inverse_[a]; }
  SymIndex pow(SymIndex a, int e) const noexcept;

  const Perm& element(SymIndex a) const { return elements_[a]; }
  SymIndex index_of(const Perm& p) const;
  std::uint16_t apply(SymIndex a, std::uint16_t x) const noexcept {
    return elements_[a][x];
  }

 private:
  explicit SymmetricGroup(int degree);

  int degree_;
  std::vector<Perm> elements_;
  std::vector<SymIndex> table_;
  std::vector<SymIndex> inverse_;
  std::vector<std::uint8_t> orders_;
};

/// d! as an unsigned integer.
std::uint64_t factorial(int d);

}  // namespace noohi

#endif
