#ifndef NOOHI_VK_HPP
#define NOOHI_VK_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "noohi/bounds.hpp"
#include "noohi/group_spec.hpp"
#include "noohi/homo.hpp"
#include "noohi/presentation.hpp"

namespace noohi {

// The van Kampen group VK(pi, pi'; pi''_1, ..., pi''_s) of a pair of groups
// glued along s legs psi_i : pi''_i -> pi, phi_i : pi''_i -> pi'. It is the
// fundamental group of the graph of groups with two vertices and s edges, and
// is built here in four different ways whose hom counts must agree.
//
// Namespaces used by the builders: `L` for pi, `R` (or `R1`..`Rs`) for
// copies of pi', `F` for the free letters v2..vs, `Q1`..`Qs` for the
// per-leg fibred coproducts of form iv.

struct VKLeg {
  Presentation group;
  Homo psi;  ///< group -> pi
  Homo phi;  ///< group -> pi'
};

struct VKData {
  Presentation pi;
  Presentation pi_prime;
  std::vector<VKLeg> legs;

  /// Throws InputError unless s >= 1 and every leg lands in pi / pi'.
  void validate() const;

  struct GroupLeg {
    GroupSpec group;
    std::map<GeneratorSymbol, Word> psi;
    std::map<GeneratorSymbol, Word> phi;
  };
  static VKData from_groups(const GroupSpec& pi, const GroupSpec& pi_prime,
                            const std::vector<GroupLeg>& legs);
};

enum class VKForm { i, ii, iii, iv };

std::string to_string(VKForm f);
VKForm parse_vk_form(std::string_view text);
inline constexpr VKForm kAllVKForms[] = {VKForm::i, VKForm::ii, VKForm::iii, VKForm::iv};

/// The group generated by u_ij with u_ii = 1 and u_ij u_jk = u_ik, presented
/// as free on v_j = u_1j (j = 2..s).
struct FreeLetters {
  Presentation presentation;
  int s = 1;

  /// v_1 is the empty word.
  Word v(int j) const;
  /// u_ij = v_i^-1 v_j.
  Word u(int i, int j) const;
};

FreeLetters build_F(int s);

struct VKGroup {
  Presentation presentation;
  /// Where the generators of pi and pi' land (the canonical maps).
  std::map<GeneratorSymbol, Word> pi_embedding;
  std::map<GeneratorSymbol, Word> pi_prime_embedding;
};

VKGroup vk_build(const VKData& data, VKForm form);

/// Two presentations with explicit maps between them.
struct MapPair {
  Presentation first;
  Presentation second;
  Homo forward;   ///< first -> second
  Homo backward;  ///< second -> first
};

/// pi' * F against s copies of pi' plus F with the conjugation relations,
/// with the maps y <-> [y]_1, g <-> g.
MapPair copies_pair(const Presentation& pi_prime, int s);

/// VK forms i and ii with the maps induced by `copies_pair`.
MapPair vk_form_pair(const VKData& data);

struct EquivalenceReport {
  /// form -> degree -> hom count
  std::map<std::string, std::map<int, std::uint64_t>> counts;
  bool maps_checked = false;
  /// One line per check performed.
  std::vector<std::string> checks;

  bool counts_agree() const;
  bool passed() const { return maps_checked && counts_agree(); }
};

/// Checks a MapPair: both maps are homomorphisms and compose to the identity
/// on generators in both orders (syntactically where possible, otherwise in
/// every action of the listed degrees).
bool check_map_pair(const MapPair& pair, std::span<const int> degrees, const Bounds& bounds,
                    std::vector<std::string>& log);

EquivalenceReport verify_copies_equivalence(const Presentation& pi_prime, int s,
                                            std::span<const int> degrees, const Bounds& bounds = {});
EquivalenceReport verify_vk_forms(const VKData& data, std::span<const int> degrees,
                                  const Bounds& bounds = {});

}  // namespace noohi

#endif
