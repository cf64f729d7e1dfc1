#ifndef NOOHI_HOMO_HPP
#define NOOHI_HOMO_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "noohi/bounds.hpp"
#include "noohi/group_spec.hpp"
#include "noohi/presentation.hpp"

namespace noohi {

/// How the relator-preservation of a Homo was established.
enum class HomoCheck {
  evaluated,   ///< every relator image evaluates to 1 in the target's realization
  syntactic,   ///< every relator image is freely trivial or a cyclic conjugate of a target relator
  semantic,    ///< relator images act trivially in every action of the tested degrees
  obligation,  ///< not discharged; recorded as a proof obligation
};

std::string to_string(HomoCheck c);

/// A homomorphism given on generators. Source generators all have images,
/// images are words on target generators, and relator preservation is checked
/// at construction as far as the target allows.
class Homo {
 public:
  /// Between finite groups, images on the target's canonical generators.
  /// Throws InputError when some relator image is not the identity.
  static Homo between(const GroupSpec& source, const GroupSpec& target,
                      std::map<GeneratorSymbol, Word> images);

  /// Between presentations. Relator images that are not syntactically
  /// discharged are kept as obligations (see `obligations()`).
  static Homo into(const Presentation& source, const Presentation& target,
                   std::map<GeneratorSymbol, Word> images);

  const Presentation& source() const noexcept { return source_; }
  const Presentation& target() const noexcept { return target_; }
  const std::map<GeneratorSymbol, Word>& images() const noexcept { return images_; }
  HomoCheck check() const noexcept { return check_; }

  /// Source relators whose image is not yet discharged.
  const std::vector<Word>& obligations() const noexcept { return obligations_; }

  Word apply(const Word& w) const;
  Word image(const GeneratorSymbol& g) const { return images_.at(g); }

  /// Discharges the remaining obligations by checking them in every action
  /// of the target at each degree. Throws InputError on a counterexample.
  Homo verified_semantically(std::span<const int> degrees, const Bounds& bounds = {}) const;

  /// Equal maps between equal presentations (how validity was checked is ignored).
  bool operator==(const Homo& rhs) const {
    return source_ == rhs.source_ && target_ == rhs.target_ && images_ == rhs.images_;
  }

  /// Same map with the target moved under a namespace tag.
  Homo retargeted(std::string_view tag) const;

  /// Composes with a map from this target's generators into `new_target`.
  Homo composed(const Presentation& new_target,
                const std::map<GeneratorSymbol, Word>& embedding) const;

 private:
  Presentation source_;
  Presentation target_;
  std::map<GeneratorSymbol, Word> images_;
  HomoCheck check_ = HomoCheck::syntactic;
  std::vector<Word> obligations_;
};

/// True when `w` is freely trivial or a cyclic conjugate of a relator of `p`
/// or of its inverse.
bool syntactically_trivial(const Presentation& p, const Word& w);

/// Fibred coproduct p1 *_a p2: the free product quotiented by psi(x) = phi(x)
/// for x ranging over the generators of a. psi and phi must share their
/// source and target p1 and p2 respectively.
Presentation fibered_coproduct(const Presentation& p1, const Presentation& p2, const Homo& psi,
                               const Homo& phi);
Presentation fibered_coproduct(const Presentation& p1, const Presentation& p2, const GroupSpec& a,
                               const Homo& psi, const Homo& phi);

}  // namespace noohi

#endif
