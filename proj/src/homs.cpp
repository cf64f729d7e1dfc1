#include "noohi/homs.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include <omp.h>

#include "noohi/errors.hpp"

namespace noohi {

namespace {

struct CompiledRelator {
  std::vector<std::pair<int, int>> letters;  // (generator index, exponent)
};

struct Compiled {
  int rank = 0;
  std::vector<CompiledRelator> relators;
};

Compiled compile(const Presentation& p) {
  std::map<GeneratorSymbol, int> index;
  for (std::size_t k = 0; k < p.generators().size(); ++k) {
    index.emplace(p.generators()[k], static_cast<int>(k));
  }
  Compiled c;
  c.rank = static_cast<int>(p.rank());
  for (const auto& r : p.relators()) {
    if (r.empty()) continue;
    CompiledRelator cr;
    for (const auto& l : r.letters()) cr.letters.emplace_back(index.at(l.symbol), l.exponent);
    c.relators.push_back(std::move(cr));
  }
  return c;
}

void check_degree(int d, const Bounds& bounds) {
  if (d < 1 || d > bounds.max_degree || d > kHardMaxDegree) {
    throw InputError("degree " + std::to_string(d) + " outside [1, " +
                     std::to_string(std::min(bounds.max_degree, kHardMaxDegree)) + "]");
  }
}

/// Generators in search order plus, per depth, the relators that become
/// fully assigned there.
struct Block {
  std::vector<int> order;
  std::vector<std::vector<int>> checks;
};

Block plan_block(const Compiled& c, const std::vector<int>& gens, const std::vector<int>& rels) {
  std::vector<std::vector<int>> rel_gens(c.relators.size());
  for (int r : rels) {
    std::vector<int> gs;
    for (auto [g, e] : c.relators[static_cast<std::size_t>(r)].letters) gs.push_back(g);
    std::sort(gs.begin(), gs.end());
    gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
    rel_gens[static_cast<std::size_t>(r)] = std::move(gs);
  }
  std::vector<bool> assigned(static_cast<std::size_t>(c.rank), false);
  std::vector<bool> done(c.relators.size(), false);
  Block b;
  for (std::size_t step = 0; step < gens.size(); ++step) {
    int best = -1;
    std::tuple<int, int> best_score{-1, -1};
    for (int g : gens) {
      if (assigned[static_cast<std::size_t>(g)]) continue;
      int completes = 0;
      int touches = 0;
      for (int r : rels) {
        const auto& gs = rel_gens[static_cast<std::size_t>(r)];
        if (done[static_cast<std::size_t>(r)] || !std::binary_search(gs.begin(), gs.end(), g)) {
          continue;
        }
        int missing = 0;
        bool partial = false;
        for (int h : gs) {
          if (h == g) continue;
          if (assigned[static_cast<std::size_t>(h)]) {
            partial = true;
          } else {
            ++missing;
          }
        }
        if (missing == 0) ++completes;
        if (partial) ++touches;
      }
      std::tuple<int, int> score{completes, touches};
      if (score > best_score) {
        best_score = score;
        best = g;
      }
    }
    assigned[static_cast<std::size_t>(best)] = true;
    b.order.push_back(best);
    std::vector<int> now;
    for (int r : rels) {
      if (done[static_cast<std::size_t>(r)]) continue;
      const auto& gs = rel_gens[static_cast<std::size_t>(r)];
      bool complete = std::all_of(gs.begin(), gs.end(),
                                  [&](int h) { return assigned[static_cast<std::size_t>(h)]; });
      if (complete) {
        done[static_cast<std::size_t>(r)] = true;
        now.push_back(r);
      }
    }
    b.checks.push_back(std::move(now));
  }
  return b;
}

/// Splits generators into blocks connected through shared relators.
/// Generators in no relator are returned separately.
std::vector<std::pair<std::vector<int>, std::vector<int>>> relator_blocks(const Compiled& c,
                                                                          std::vector<int>& loose) {
  std::vector<int> parent(static_cast<std::size_t>(c.rank));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<bool> used(static_cast<std::size_t>(c.rank), false);
  for (const auto& r : c.relators) {
    int first = r.letters.front().first;
    for (auto [g, e] : r.letters) {
      used[static_cast<std::size_t>(g)] = true;
      parent[static_cast<std::size_t>(find(g))] = find(first);
    }
  }
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_root;
  std::vector<int> roots_in_order;
  for (int g = 0; g < c.rank; ++g) {
    if (!used[static_cast<std::size_t>(g)]) {
      loose.push_back(g);
      continue;
    }
    int root = find(g);
    if (!by_root.count(root)) roots_in_order.push_back(root);
    by_root[root].first.push_back(g);
  }
  for (std::size_t r = 0; r < c.relators.size(); ++r) {
    by_root[find(c.relators[r].letters.front().first)].second.push_back(static_cast<int>(r));
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int root : roots_in_order) out.push_back(std::move(by_root[root]));
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ResourceError("homomorphism count overflows 64 bits", static_cast<double>(a) * static_cast<double>(b));
  }
  return r;
}

/// Shared node budget across threads.
struct Budget {
  std::uint64_t ceiling;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  explicit Budget(std::uint64_t c) : ceiling(c) {}
};

class Searcher {
 public:
  Searcher(const SymmetricGroup& sym, const Compiled& c, const Block& b, Budget& budget)
      : sym_(sym), c_(c), b_(b), budget_(budget), images_(static_cast<std::size_t>(c.rank), 0) {}

  ~Searcher() { flush(); }

  std::vector<SymIndex>& images() { return images_; }

  /// Assigns depth `depth` to `value`; true when every relator completed
  /// there holds.
  bool place(std::size_t depth, SymIndex value) {
    images_[static_cast<std::size_t>(b_.order[depth])] = value;
    if (++local_nodes_ == 4096) flush();
    for (int r : b_.checks[depth]) {
      if (!holds(c_.relators[static_cast<std::size_t>(r)])) return false;
    }
    return true;
  }

  bool stopped() const { return budget_.exhausted.load(std::memory_order_relaxed); }

  template <typename Leaf>
  void descend(std::size_t depth, Leaf& leaf) {
    if (depth == b_.order.size()) {
      leaf(images_);
      return;
    }
    if (stopped()) return;
    const auto n = static_cast<SymIndex>(sym_.order());
    for (SymIndex v = 0; v < n; ++v) {
      if (place(depth, v)) descend(depth + 1, leaf);
    }
  }

 private:
  bool holds(const CompiledRelator& r) const {
    SymIndex acc = SymmetricGroup::identity();
    for (auto [g, e] : r.letters) acc = sym_.mul(acc, sym_.pow(images_[static_cast<std::size_t>(g)], e));
    return acc == SymmetricGroup::identity();
  }

  void flush() {
    if (local_nodes_ == 0) return;
    auto total = budget_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (total > budget_.ceiling) budget_.exhausted.store(true, std::memory_order_relaxed);
  }

  const SymmetricGroup& sym_;
  const Compiled& c_;
  const Block& b_;
  Budget& budget_;
  std::vector<SymIndex> images_;
  std::uint64_t local_nodes_ = 0;
};

/// Parallel count of leaves accepted by `accept`, first generator's images
/// distributed across threads.
template <typename Accept>
std::uint64_t parallel_count(const SymmetricGroup& sym, const Compiled& c, const Block& b,
                             Budget& budget, Accept accept) {
  const int n = static_cast<int>(sym.order());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int v = 0; v < n; ++v) {
    Searcher s(sym, c, b, budget);
    std::uint64_t local = 0;
    auto leaf = [&](const std::vector<SymIndex>& img) {
      if (accept(img)) ++local;
    };
    if (s.place(0, static_cast<SymIndex>(v))) s.descend(1, leaf);
    total += local;
  }
  return total;
}

[[noreturn]] void throw_budget(const Presentation& p, int d, const Bounds& bounds) {
  std::ostringstream os;
  os << "homomorphism search at degree " << d << " exceeds the ceiling of " << bounds.ceiling
     << " nodes (unpruned estimate " << hom_search_estimate(p, d) << ")";
  throw ResourceError(os.str(), hom_search_estimate(p, d));
}

}  // namespace

double hom_search_estimate(const Presentation& p, int d) {
  const Compiled c = compile(p);
  std::vector<int> loose;
  auto blocks = relator_blocks(c, loose);
  const double f = static_cast<double>(factorial(d));
  double est = 0;
  for (const auto& [gens, rels] : blocks) est += std::pow(f, static_cast<double>(gens.size()));
  return est;
}

std::uint64_t count_homs(const Presentation& p, int d, const Bounds& bounds) {
  check_degree(d, bounds);
  const auto& sym = SymmetricGroup::of(d);
  const Compiled c = compile(p);
  std::vector<int> loose;
  const auto blocks = relator_blocks(c, loose);
  Budget budget(bounds.ceiling);

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < loose.size(); ++k) total = checked_mul(total, sym.order());
  for (const auto& [gens, rels] : blocks) {
    const Block b = plan_block(c, gens, rels);
    const auto part = parallel_count(sym, c, b, budget, [](const std::vector<SymIndex>&) { return true; });
    if (budget.exhausted) throw_budget(p, d, bounds);
    total = checked_mul(total, part);
    if (total == 0) break;
  }
  return total;
}

std::uint64_t count_transitive_homs(const Presentation& p, int d, const Bounds& bounds) {
  check_degree(d, bounds);
  const auto& sym = SymmetricGroup::of(d);
  const Compiled c = compile(p);
  if (c.rank == 0) return d == 1 ? 1 : 0;
  std::vector<int> all(static_cast<std::size_t>(c.rank));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> rels(c.relators.size());
  std::iota(rels.begin(), rels.end(), 0);
  const Block b = plan_block(c, all, rels);
  Budget budget(bounds.ceiling);
  const auto count = parallel_count(sym, c, b, budget, [&](const std::vector<SymIndex>& img) {
    return is_transitive(sym, img);
  });
  if (budget.exhausted) throw_budget(p, d, bounds);
  return count;
}

void for_each_hom(const Presentation& p, int d,
                  const std::function<void(std::span<const SymIndex>)>& visit,
                  const Bounds& bounds) {
  check_degree(d, bounds);
  const auto& sym = SymmetricGroup::of(d);
  const Compiled c = compile(p);
  if (c.rank == 0) {
    visit({});
    return;
  }
  std::vector<int> all(static_cast<std::size_t>(c.rank));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> rels(c.relators.size());
  std::iota(rels.begin(), rels.end(), 0);
  const Block b = plan_block(c, all, rels);
  Budget budget(bounds.ceiling);
  {
    Searcher s(sym, c, b, budget);
    auto leaf = [&](const std::vector<SymIndex>& img) { visit(img); };
    s.descend(0, leaf);
  }
  if (budget.exhausted) throw_budget(p, d, bounds);
}

std::vector<std::vector<SymIndex>> all_homs(const Presentation& p, int d, const Bounds& bounds) {
  std::vector<std::vector<SymIndex>> out;
  for_each_hom(
      p, d, [&](std::span<const SymIndex> img) { out.emplace_back(img.begin(), img.end()); },
      bounds);
  return out;
}

SymIndex evaluate_word(const SymmetricGroup& sym, const Presentation& p,
                       std::span<const SymIndex> images, const Word& w) {
  std::map<GeneratorSymbol, SymIndex> assignment;
  for (std::size_t k = 0; k < p.generators().size(); ++k) assignment[p.generators()[k]] = images[k];
  return evaluate_word(sym, assignment, w);
}

SymIndex evaluate_word(const SymmetricGroup& sym,
                       const std::map<GeneratorSymbol, SymIndex>& images, const Word& w) {
  SymIndex acc = SymmetricGroup::identity();
  for (const auto& l : w.letters()) {
    auto it = images.find(l.symbol);
    if (it == images.end()) throw InputError("no image for generator '" + l.symbol.str() + "'");
    acc = sym.mul(acc, sym.pow(it->second, l.exponent));
  }
  return acc;
}

bool is_transitive(const SymmetricGroup& sym, std::span<const SymIndex> images) {
  const int d = sym.degree();
  if (d <= 1) return true;
  std::uint32_t seen = 1u;
  std::uint16_t stack[kHardMaxDegree];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const auto x = stack[--top];
    for (auto g : images) {
      const auto y = sym.apply(g, x);
      if (!(seen & (1u << y))) {
        seen |= 1u << y;
        stack[top++] = y;
      }
    }
  }
  return seen == (1u << d) - 1u;
}

}  // namespace noohi
