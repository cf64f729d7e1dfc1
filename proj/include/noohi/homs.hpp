#ifndef NOOHI_HOMS_HPP
#define NOOHI_HOMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "noohi/bounds.hpp"
#include "noohi/perm.hpp"
#include "noohi/presentation.hpp"

namespace noohi {

// Homomorphisms from a finitely presented group into Sym(d), i.e. degree-d
// actions. These counts are the semantics of every presentation built by the
// library: two constructions are regarded as equal when their counts agree.
//
// The OpenMP kernels below split the relator graph into independent blocks
// of generators, order each block so that relators are checked as early as
// possible, and distribute the first generator's images across threads. The
// `reference` namespace keeps the plain odometer enumeration they are tested
// and benchmarked against.

/// Exact number of maps generators -> Sym(d) killing every relator.
/// Throws ResourceError when more than `bounds.ceiling` search nodes would be
/// visited, InputError when d is outside [1, bounds.max_degree].
std::uint64_t count_homs(const Presentation& p, int d, const Bounds& bounds = {});

/// As count_homs, restricted to actions whose image is transitive on [d].
std::uint64_t count_transitive_homs(const Presentation& p, int d, const Bounds& bounds = {});

/// Serial visit of every homomorphism; images are listed in generator order.
void for_each_hom(const Presentation& p, int d,
                  const std::function<void(std::span<const SymIndex>)>& visit,
                  const Bounds& bounds = {});

std::vector<std::vector<SymIndex>> all_homs(const Presentation& p, int d,
                                            const Bounds& bounds = {});

/// Evaluates `w` under the assignment generators()[k] -> images[k].
SymIndex evaluate_word(const SymmetricGroup& sym, const Presentation& p,
                       std::span<const SymIndex> images, const Word& w);

/// Evaluates `w` under an explicit symbol assignment (missing symbols throw).
SymIndex evaluate_word(const SymmetricGroup& sym,
                       const std::map<GeneratorSymbol, SymIndex>& images, const Word& w);

/// True when the subgroup generated by `images` is transitive on [d].
bool is_transitive(const SymmetricGroup& sym, std::span<const SymIndex> images);

/// A priori size of the unpruned search for count_homs: sum over
/// relator-connected generator blocks of (d!)^(block size).
double hom_search_estimate(const Presentation& p, int d);

namespace reference {

/// Brute-force odometer over all (d!)^rank tuples; serial.
std::uint64_t count_homs(const Presentation& p, int d, const Bounds& bounds = {});
std::uint64_t count_transitive_homs(const Presentation& p, int d, const Bounds& bounds = {});

}  // namespace reference

}  // namespace noohi

#endif
