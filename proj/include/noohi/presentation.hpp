#ifndef NOOHI_PRESENTATION_HPP
#define NOOHI_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noohi/word.hpp"

namespace noohi {

/// A finite presentation. Generators are unique, relators use declared
/// generators only and are stored cyclically reduced (an empty relator is
/// kept as is; `tietze_simplify` removes it).
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<GeneratorSymbol> generators, std::vector<Word> relators);

  /// Free group of rank `rank` on `ns.<prefix>1`, ..., `ns.<prefix>rank`.
  static Presentation free(int rank, std::string ns = "", std::string prefix = "x");

  const std::vector<GeneratorSymbol>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t rank() const noexcept { return generators_.size(); }

  bool has_generator(const GeneratorSymbol& s) const;
  /// Throws InputError if `w` uses an undeclared generator.
  void require_word(const Word& w, std::string_view context) const;

  /// Every generator moved under the namespace tag.
  Presentation retagged(std::string_view tag) const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<GeneratorSymbol> generators_;
  std::vector<Word> relators_;
};

std::ostream& operator<<(std::ostream& os, const Presentation& p);

/// Free product. The generator sets must already be disjoint; callers retag
/// with fresh namespaces first. A collision raises InternalError.
Presentation free_product(const Presentation& p1, const Presentation& p2);

/// Adds `f * g^-1` as a relator for each pair.
Presentation quotient_by_relations(const Presentation& p,
                                   const std::vector<std::pair<Word, Word>>& pairs);

}  // namespace noohi

#endif
