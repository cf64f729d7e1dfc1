#ifndef NOOHI_TIETZE_HPP
#define NOOHI_TIETZE_HPP

#include "noohi/presentation.hpp"

namespace noohi {

/// Simplifies a presentation using only moves that preserve every hom count:
/// cyclic reduction, removal of trivial and duplicate relators (up to cyclic
/// permutation and inversion), and elimination of a generator g whenever a
/// relator reads g = w with g absent from w. Elimination stops once the next
/// substitution would push the total relator length past `max_total_length`.
Presentation tietze_simplify(const Presentation& p, std::size_t max_total_length = 20000);

}  // namespace noohi

#endif
