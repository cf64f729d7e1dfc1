#include "noohi/group_spec.hpp"

#include <deque>
#include <map>
#include <set>

#include "noohi/errors.hpp"
#include "noohi/homs.hpp"

namespace noohi {

namespace {

std::uint64_t checked_order(const std::vector<Perm>& gens, std::size_t degree, const Bounds& bounds) {
  auto elements = closure(gens, degree, bounds.max_group_order);
  if (elements.empty()) {
    throw ResourceError("group order exceeds the bound " + std::to_string(bounds.max_group_order),
                        static_cast<double>(bounds.max_group_order));
  }
  return elements.size();
}

/// Presentation read off a BFS spanning tree of the Cayley graph: one relator
/// path(g) s path(gs)^-1 for every non-tree edge (g, s).
Presentation cayley_presentation(const std::vector<GeneratorSymbol>& symbols,
                                 const std::vector<Perm>& gens, std::size_t degree,
                                 const Bounds& bounds) {
  std::map<Perm, Word> path;
  std::deque<Perm> queue;
  const Perm id = identity_perm(degree);
  path.emplace(id, Word{});
  queue.push_back(id);
  std::set<std::pair<Perm, std::size_t>> tree_edges;
  while (!queue.empty()) {
    Perm g = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm h = compose(g, gens[k]);
      if (!path.count(h)) {
        if (path.size() >= bounds.max_group_order) {
          throw ResourceError("group order exceeds the bound", static_cast<double>(bounds.max_group_order));
        }
        path.emplace(h, path.at(g) * Word::generator(symbols[k]));
        tree_edges.emplace(g, k);
        queue.push_back(std::move(h));
      }
    }
  }
  std::vector<Word> relators;
  std::set<Word> seen;
  for (const auto& [g, w] : path) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (tree_edges.count({g, k})) continue;
      Word r = (w * Word::generator(symbols[k]) * path.at(compose(g, gens[k])).inverse()).cyclically_reduced();
      if (r.empty()) continue;
      if (seen.insert(r.canonical_cyclic()).second) relators.push_back(r);
    }
  }
  return Presentation(symbols, std::move(relators));
}

}  // namespace

std::string to_string(GroupSpec::Kind kind) {
  switch (kind) {
    case GroupSpec::Kind::trivial: return "trivial";
    case GroupSpec::Kind::cyclic: return "cyclic";
    case GroupSpec::Kind::symmetric: return "symmetric";
    case GroupSpec::Kind::permutation: return "permutation";
    case GroupSpec::Kind::presented: return "presented";
  }
  return "?";
}

GroupSpec GroupSpec::trivial() { return GroupSpec{}; }

GroupSpec GroupSpec::cyclic(int k, const Bounds& bounds) {
  if (k < 1) throw InputError("cyclic group order must be positive");
  if (static_cast<std::uint64_t>(k) > bounds.max_group_order) {
    throw ResourceError("cyclic group order exceeds the bound", k);
  }
  GroupSpec g;
  g.kind_ = Kind::cyclic;
  g.parameter_ = k;
  g.order_ = static_cast<std::uint64_t>(k);
  g.degree_ = static_cast<std::size_t>(k);
  Perm cycle(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) cycle[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>((x + 1) % k);
  g.realization_ = {cycle};
  GeneratorSymbol gen{"", "g"};
  g.presentation_ = Presentation({gen}, {Word::generator(gen, k)});
  return g;
}

GroupSpec GroupSpec::symmetric(int k, const Bounds& bounds) {
  if (k < 1) throw InputError("symmetric group degree must be positive");
  if (factorial(k) > bounds.max_group_order || k > 20) {
    throw ResourceError("symmetric group order exceeds the bound", static_cast<double>(factorial(std::min(k, 20))));
  }
  GroupSpec g;
  g.kind_ = Kind::symmetric;
  g.parameter_ = k;
  g.order_ = factorial(k);
  g.degree_ = static_cast<std::size_t>(k);
  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i < k; ++i) {
    gens.push_back({"", "s" + std::to_string(i)});
    Perm t = identity_perm(static_cast<std::size_t>(k));
    std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
    g.realization_.push_back(t);
  }
  std::vector<Word> rels;
  for (int i = 0; i + 1 < k; ++i) {
    auto si = Word::generator(gens[static_cast<std::size_t>(i)]);
    rels.push_back(Word::generator(gens[static_cast<std::size_t>(i)], 2));
    for (int j = i + 1; j + 1 < k; ++j) {
      auto sj = Word::generator(gens[static_cast<std::size_t>(j)]);
      auto prod = si * sj;
      rels.push_back(j == i + 1 ? prod * prod * prod : prod * prod);
    }
  }
  g.presentation_ = Presentation(std::move(gens), std::move(rels));
  return g;
}

GroupSpec GroupSpec::permutation(std::size_t degree, std::vector<Perm> gens, const Bounds& bounds) {
  if (degree < 1 || degree > 255) throw InputError("permutation degree must be in [1, 255]");
  for (const auto& p : gens) {
    if (p.size() != degree || !is_permutation(p)) {
      throw InputError("generator is not a permutation of degree " + std::to_string(degree));
    }
  }
  GroupSpec g;
  g.kind_ = Kind::permutation;
  g.parameter_ = static_cast<int>(degree);
  g.degree_ = degree;
  g.order_ = checked_order(gens, degree, bounds);
  std::vector<GeneratorSymbol> symbols;
  for (std::size_t k = 1; k <= gens.size(); ++k) symbols.push_back({"", "p" + std::to_string(k)});
  g.presentation_ = cayley_presentation(symbols, gens, degree, bounds);
  g.realization_ = std::move(gens);
  return g;
}

GroupSpec GroupSpec::presented(Presentation p, std::uint64_t order,
                               std::optional<std::vector<Perm>> realization, const Bounds& bounds) {
  if (order < 1) throw InputError("declared group order must be positive");
  if (order > bounds.max_group_order) {
    throw ResourceError("declared group order exceeds the bound", static_cast<double>(order));
  }
  for (const auto& s : p.generators()) {
    if (!s.ns.empty()) throw InputError("presented group generators must not carry a namespace");
  }
  GroupSpec g;
  g.kind_ = Kind::presented;
  g.order_ = order;
  g.presentation_ = std::move(p);

  auto accept = [&](const std::vector<Perm>& images, std::size_t degree) {
    if (images.size() != g.presentation_.rank()) return false;
    std::map<GeneratorSymbol, Perm> assignment;
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (images[k].size() != degree || !is_permutation(images[k])) return false;
      assignment[g.presentation_.generators()[k]] = images[k];
    }
    for (const auto& r : g.presentation_.relators()) {
      Perm acc = identity_perm(degree);
      for (const auto& l : r.letters()) {
        Perm base = l.exponent > 0 ? assignment[l.symbol] : inverse(assignment[l.symbol]);
        for (int e = 0; e < std::abs(l.exponent); ++e) acc = compose(acc, base);
      }
      if (!is_identity(acc)) return false;
    }
    auto elements = closure(images, degree, order + 1);
    return !elements.empty() && elements.size() == order;
  };

  if (realization) {
    const std::size_t degree = realization->empty() ? 1 : realization->front().size();
    if (!accept(*realization, degree)) {
      throw InputError("realization does not satisfy the relators with image of order " +
                       std::to_string(order));
    }
    g.degree_ = degree;
    g.parameter_ = static_cast<int>(degree);
    g.realization_ = std::move(*realization);
    return g;
  }

  for (int d = 1; d <= std::min(bounds.max_degree, kHardMaxDegree); ++d) {
    const auto& sym = SymmetricGroup::of(d);
    std::optional<std::vector<Perm>> found;
    for_each_hom(
        g.presentation_, d,
        [&](std::span<const SymIndex> img) {
          if (found) return;
          std::vector<Perm> perms;
          for (auto x : img) perms.push_back(sym.element(x));
          if (accept(perms, static_cast<std::size_t>(d))) found = std::move(perms);
        },
        bounds);
    if (found) {
      g.degree_ = static_cast<std::size_t>(d);
      g.parameter_ = d;
      g.realization_ = std::move(*found);
      return g;
    }
  }
  throw InputError("no permutation image of order " + std::to_string(order) +
                   " found up to degree " + std::to_string(bounds.max_degree) +
                   "; supply an explicit realization");
}

Perm GroupSpec::evaluate(const Word& w) const {
  Perm acc = identity_perm(degree_);
  const auto& gens = presentation_.generators();
  for (const auto& l : w.letters()) {
    std::size_t k = 0;
    while (k < gens.size() && gens[k] != l.symbol) ++k;
    if (k == gens.size()) {
      throw InputError("generator '" + l.symbol.str() + "' not in group " + describe());
    }
    Perm base = l.exponent > 0 ? realization_[k] : inverse(realization_[k]);
    for (int e = 0; e < std::abs(l.exponent); ++e) acc = compose(acc, base);
  }
  return acc;
}

std::string GroupSpec::describe() const {
  switch (kind_) {
    case Kind::trivial: return "1";
    case Kind::cyclic: return "C" + std::to_string(parameter_);
    case Kind::symmetric: return "S" + std::to_string(parameter_);
    case Kind::permutation:
      return "Perm(" + std::to_string(parameter_) + "; order " + std::to_string(order_) + ")";
    case Kind::presented: return "Presented(order " + std::to_string(order_) + ")";
  }
  return "?";
}

bool GroupSpec::operator==(const GroupSpec& rhs) const {
  return kind_ == rhs.kind_ && parameter_ == rhs.parameter_ && order_ == rhs.order_ &&
         presentation_ == rhs.presentation_ && realization_ == rhs.realization_;
}

}  // namespace noohi
