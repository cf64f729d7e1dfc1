#include "noohi/presentation.hpp"

#include <set>

#include "noohi/errors.hpp"

namespace noohi {

Presentation::Presentation(std::vector<GeneratorSymbol> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<GeneratorSymbol> seen;
  for (const auto& g : generators_) {
    if (g.name.empty() || g.name.find('.') != std::string::npos) {
      throw InputError("invalid generator name '" + g.str() + "'");
    }
    if (!seen.insert(g).second) throw InputError("duplicate generator '" + g.str() + "'");
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (!seen.count(l.symbol)) {
        throw InputError("relator uses undeclared generator '" + l.symbol.str() + "'");
      }
    }
    relators_.push_back(r.cyclically_reduced());
  }
}

Presentation Presentation::free(int rank, std::string ns, std::string prefix) {
  if (rank < 0) throw InputError("negative free rank");
  std::vector<GeneratorSymbol> gens;
  for (int k = 1; k <= rank; ++k) gens.push_back({ns, prefix + std::to_string(k)});
  return Presentation(std::move(gens), {});
}

bool Presentation::has_generator(const GeneratorSymbol& s) const {
  for (const auto& g : generators_) {
    if (g == s) return true;
  }
  return false;
}

void Presentation::require_word(const Word& w, std::string_view context) const {
  for (const auto& l : w.letters()) {
    if (!has_generator(l.symbol)) {
      throw InputError(std::string(context) + ": undeclared generator '" + l.symbol.str() + "'");
    }
  }
}

Presentation Presentation::retagged(std::string_view tag) const {
  Presentation p;
  p.generators_.reserve(generators_.size());
  for (const auto& g : generators_) p.generators_.push_back(g.retagged(tag));
  p.relators_.reserve(relators_.size());
  for (const auto& r : relators_) p.relators_.push_back(r.retagged(tag));
  return p;
}

std::ostream& operator<<(std::ostream& os, const Presentation& p) {
  os << "< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    os << (i ? ", " : "") << p.generators()[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    os << (i ? ", " : "") << p.relators()[i];
  }
  return os << " >";
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
  std::set<GeneratorSymbol> left(p1.generators().begin(), p1.generators().end());
  for (const auto& g : p2.generators()) {
    if (left.count(g)) {
      throw InternalError("free_product: generator '" + g.str() +
                          "' present on both sides; operands must be retagged first");
    }
  }
  auto gens = p1.generators();
  gens.insert(gens.end(), p2.generators().begin(), p2.generators().end());
  auto rels = p1.relators();
  rels.insert(rels.end(), p2.relators().begin(), p2.relators().end());
  return Presentation(std::move(gens), std::move(rels));
}

Presentation quotient_by_relations(const Presentation& p,
                                   const std::vector<std::pair<Word, Word>>& pairs) {
  auto rels = p.relators();
  for (const auto& [f, g] : pairs) {
    p.require_word(f, "quotient_by_relations");
    p.require_word(g, "quotient_by_relations");
    rels.push_back(f * g.inverse());
  }
  return Presentation(p.generators(), std::move(rels));
}

}  // namespace noohi
