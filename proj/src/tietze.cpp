#include "noohi/tietze.hpp"

#include <limits>
#include <optional>
#include <set>

namespace noohi {

namespace {

std::vector<Word> clean(const std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : relators) {
    Word c = r.cyclically_reduced();
    if (c.empty()) continue;
    if (seen.insert(c.canonical_cyclic()).second) out.push_back(std::move(c));
  }
  return out;
}

struct Elimination {
  std::size_t relator;
  GeneratorSymbol generator;
  Word value;
};

/// Shortest relator containing a generator exactly once with exponent +-1.
std::optional<Elimination> find_elimination(const std::vector<Word>& relators) {
  std::optional<Elimination> best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const auto& letters = relators[i].letters();
    if (relators[i].length() >= best_len) continue;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const auto& l = letters[k];
      if (std::abs(l.exponent) != 1 || relators[i].occurrences(l.symbol) != 1) continue;
      // Rotate so the letter is first: r ~ g^e W, hence g = W^-1 (e = 1) or W (e = -1).
      std::vector<Letter> rest(letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, letters.end());
      rest.insert(rest.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
      Word w(std::move(rest));
      best = Elimination{i, l.symbol, l.exponent == 1 ? w.inverse() : w};
      best_len = relators[i].length();
      break;
    }
  }
  return best;
}

std::size_t total_length(const std::vector<Word>& relators) {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.length();
  return n;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, std::size_t max_total_length) {
  std::vector<GeneratorSymbol> gens = p.generators();
  std::vector<Word> rels = clean(p.relators());

  while (true) {
    auto elim = find_elimination(rels);
    if (!elim) break;
    std::vector<Word> next;
    next.reserve(rels.size());
    const std::map<GeneratorSymbol, Word> sub{{elim->generator, elim->value}};
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (i != elim->relator) next.push_back(rels[i].substituted(sub));
    }
    next = clean(next);
    if (total_length(next) > max_total_length) break;
    rels = std::move(next);
    std::erase(gens, elim->generator);
  }
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace noohi
