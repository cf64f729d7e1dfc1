#include "fixtures.hpp"

#include <algorithm>

#include "noohi/json_io.hpp"

#ifndef NOOHI_CORPUS_DIR
#error "NOOHI_CORPUS_DIR must point at the corpus directory"
#endif

namespace noohi::fixtures {

namespace {

GeneratorSymbol gen(const std::string& name) { return {"", name}; }
Word letter(const std::string& name, int e = 1) { return Word::generator(gen(name), e); }

GroupSpec pick_vertex_group(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return GroupSpec::trivial();
    case 1: return GroupSpec::cyclic(2);
    default: return GroupSpec::cyclic(3);
  }
}

/// Incidence pairs (component index, singular index) of a random connected
/// bipartite multigraph; every vertex has an edge unless n = 1, m = 0.
std::vector<std::pair<int, int>> random_incidence(std::mt19937_64& rng, int n, int m, int max_branches) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> comps{0};
  std::vector<int> sings;
  std::vector<std::pair<char, int>> pending;
  for (int i = 1; i < n; ++i) pending.push_back({'c', i});
  for (int j = 0; j < m; ++j) pending.push_back({'s', j});
  std::shuffle(pending.begin(), pending.end(), rng);
  while (!pending.empty()) {
    auto it = pending.begin();
    if (sings.empty()) {
      it = std::find_if(pending.begin(), pending.end(), [](const auto& v) { return v.first == 's'; });
    }
    const auto [type, index] = *it;
    pending.erase(it);
    if (type == 's') {
      const int c = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
      edges.emplace_back(c, index);
      sings.push_back(index);
    } else {
      const int s = sings[std::uniform_int_distribution<std::size_t>(0, sings.size() - 1)(rng)];
      edges.emplace_back(index, s);
      comps.push_back(index);
    }
  }
  if (m > 0) {
    const int room = max_branches - static_cast<int>(edges.size());
    const int extra = room > 0 ? std::uniform_int_distribution<int>(0, room)(rng) : 0;
    for (int k = 0; k < extra; ++k) {
      edges.emplace_back(std::uniform_int_distribution<int>(0, n - 1)(rng),
                         std::uniform_int_distribution<int>(0, m - 1)(rng));
    }
  }
  return edges;
}

std::pair<int, int> random_shape(std::mt19937_64& rng, int max_n, int max_m, int max_branches) {
  while (true) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const int m = std::uniform_int_distribution<int>(n > 1 ? 1 : 0, max_m)(rng);
    if (n + m - 1 <= max_branches) return {n, m};
  }
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"regular", "nodal", "chain", "theta", "star", "semistable-C2",
          "nontrivial-Z", "nontrivial-Z-quotient", "nontrivial-devissage"};
}

std::vector<std::string> trivial_singular_corpus() {
  return {"regular", "nodal", "chain", "theta", "star", "semistable-C2"};
}

std::string corpus_path(const std::string& name) { return std::string(NOOHI_CORPUS_DIR) + "/" + name + ".json"; }

SchemeConfig load_corpus(const std::string& name) { return load_config(corpus_path(name)); }

Presentation random_presentation(std::mt19937_64& rng, int max_gens, int max_relators, int max_length) {
  const int rank = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::vector<GeneratorSymbol> gens;
  for (int k = 1; k <= rank; ++k) gens.push_back({"", "x" + std::to_string(k)});
  auto random_word = [&](int length) {
    std::vector<Letter> letters;
    for (int k = 0; k < length; ++k) {
      letters.push_back({gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)],
                         std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    }
    return Word(std::move(letters));
  };
  const int count = std::uniform_int_distribution<int>(0, max_relators)(rng);
  std::vector<Word> relators;
  for (int r = 0; r < count; ++r) {
    const int length = std::uniform_int_distribution<int>(1, max_length)(rng);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      // g^-1 w with g absent from w, padded to the requested length.
      const auto& g = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
      std::vector<Letter> letters{{g, -1}};
      const Word tail = random_word(length - 1);
      for (const auto& l : tail.letters()) {
        if (!(l.symbol == g)) letters.push_back(l);
      }
      relators.emplace_back(std::move(letters));
    } else {
      relators.push_back(random_word(length));
    }
  }
  return Presentation(std::move(gens), std::move(relators));
}

SchemeConfig random_trivial_config(std::mt19937_64& rng, int max_n, int max_m, int max_branches) {
  const auto [n, m] = random_shape(rng, max_n, max_m, max_branches);
  SchemeConfig cfg;
  for (int i = 0; i < n; ++i) cfg.add_component("X" + std::to_string(i + 1), pick_vertex_group(rng));
  for (int j = 0; j < m; ++j) cfg.add_singular("Z" + std::to_string(j + 1));
  int b = 0;
  for (auto [i, j] : random_incidence(rng, n, m, max_branches)) {
    cfg.add_branch("b" + std::to_string(++b), "X" + std::to_string(i + 1), "Z" + std::to_string(j + 1));
  }
  return cfg;
}

SchemeConfig random_c2_config(std::mt19937_64& rng, int max_n, int max_m, int max_branches) {
  const auto [n, m] = random_shape(rng, max_n, max_m, max_branches);
  SchemeConfig cfg;
  auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  for (int i = 0; i < n; ++i) {
    cfg.add_component("X" + std::to_string(i + 1), coin() ? GroupSpec::cyclic(2) : GroupSpec::trivial());
  }
  for (int j = 0; j < m; ++j) {
    cfg.add_singular("Z" + std::to_string(j + 1), coin() ? GroupSpec::cyclic(2) : GroupSpec::trivial());
  }
  int b = 0;
  for (auto [i, j] : random_incidence(rng, n, m, max_branches)) {
    const std::string c = "X" + std::to_string(i + 1);
    const std::string s = "Z" + std::to_string(j + 1);
    const std::string id = "b" + std::to_string(++b);
    const bool c2c = !cfg.component(c).group.is_trivial();
    const bool c2s = !cfg.singular(s).group.is_trivial();
    if ((c2c || c2s) && coin()) {
      const GroupSpec k = GroupSpec::cyclic(2);
      cfg.add_branch(id, c, s, k, {{gen("g"), c2c ? letter("g") : Word{}}}, {{gen("g"), c2s ? letter("g") : Word{}}});
    } else {
      cfg.add_branch(id, c, s);
    }
  }
  return cfg;
}

std::vector<GroupSpec> small_groups() {
  return {GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::symmetric(3)};
}

std::map<GeneratorSymbol, Word> trivial_hom(const GroupSpec& a) {
  std::map<GeneratorSymbol, Word> out;
  for (const auto& g : a.presentation().generators()) out[g] = Word{};
  return out;
}

std::map<GeneratorSymbol, Word> default_hom(const GroupSpec& a, const GroupSpec& b) {
  const std::string from = a.describe();
  const std::string to = b.describe();
  if (from == "C2" && to == "C2") return {{gen("g"), letter("g")}};
  if (from == "C2" && to == "S3") return {{gen("g"), letter("s1")}};
  if (from == "C3" && to == "C3") return {{gen("g"), letter("g")}};
  if (from == "C3" && to == "S3") return {{gen("g"), letter("s1") * letter("s2")}};
  if (from == "S3" && to == "S3") return {{gen("s1"), letter("s1")}, {gen("s2"), letter("s2")}};
  if (from == "S3" && to == "C2") return {{gen("s1"), letter("g")}, {gen("s2"), letter("g")}};
  return trivial_hom(a);
}

VKData grid_vk_data(const GroupSpec& pi, const GroupSpec& pi_prime, const GroupSpec& leg, int s) {
  std::vector<VKData::GroupLeg> legs;
  for (int k = 1; k <= s; ++k) {
    legs.push_back({leg, k % 2 == 0 ? trivial_hom(leg) : default_hom(leg, pi), default_hom(leg, pi_prime)});
  }
  return VKData::from_groups(pi, pi_prime, legs);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace noohi::fixtures
