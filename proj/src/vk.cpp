#include "noohi/vk.hpp"

#include <sstream>

#include "noohi/errors.hpp"
#include "noohi/homs.hpp"

namespace noohi {

namespace {

std::map<GeneratorSymbol, Word> tag_embedding(const Presentation& p, std::string_view tag) {
  std::map<GeneratorSymbol, Word> e;
  for (const auto& g : p.generators()) e[g] = Word::generator(g.retagged(tag));
  return e;
}

std::string copy_tag(int i) { return "R" + std::to_string(i); }

/// Relations u_ij^-1 [y]_i u_ij = [y]_j for all i, j and generators y,
/// where `copy(i)` embeds pi' into its i-th copy.
template <typename Copy>
std::vector<std::pair<Word, Word>> conjugation_relations(const Presentation& pi_prime,
                                                         const FreeLetters& f, Copy copy) {
  std::vector<std::pair<Word, Word>> pairs;
  for (int i = 1; i <= f.s; ++i) {
    for (int j = 1; j <= f.s; ++j) {
      for (const auto& y : pi_prime.generators()) {
        const Word uij = f.u(i, j);
        pairs.emplace_back(uij.inverse() * copy(i, y) * uij, copy(j, y));
      }
    }
  }
  return pairs;
}

std::string degree_list(std::span<const int> degrees) {
  std::string s;
  for (int d : degrees) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

/// Validity of a map: syntactic if possible, else checked in every action of
/// the target at the listed degrees.
bool check_homo(const Homo& h, std::string_view name, std::span<const int> degrees,
                const Bounds& bounds, std::vector<std::string>& log) {
  if (h.check() != HomoCheck::obligation) {
    log.push_back(std::string(name) + ": homomorphism (" + to_string(h.check()) + ")");
    return true;
  }
  try {
    (void)h.verified_semantically(degrees, bounds);
    log.push_back(std::string(name) + ": homomorphism (semantic, degrees " + degree_list(degrees) + ")");
    return true;
  } catch (const InputError& e) {
    log.push_back(std::string(name) + ": NOT a homomorphism: " + e.what());
    return false;
  }
}

/// second(first(g)) == g for every generator g of `domain`.
bool check_round_trip(const Presentation& domain, const Homo& first, const Homo& second,
                      std::string_view name, std::span<const int> degrees, const Bounds& bounds,
                      std::vector<std::string>& log) {
  std::vector<std::pair<GeneratorSymbol, Word>> open;
  for (const auto& g : domain.generators()) {
    const Word back = second.apply(first.image(g));
    const Word diff = back * Word::generator(g).inverse();
    if (!syntactically_trivial(domain, diff)) open.emplace_back(g, back);
  }
  if (open.empty()) {
    log.push_back(std::string(name) + ": identity on generators (syntactic)");
    return true;
  }
  for (int d : degrees) {
    const auto& sym = SymmetricGroup::of(d);
    bool ok = true;
    for_each_hom(
        domain, d,
        [&](std::span<const SymIndex> img) {
          if (!ok) return;
          for (const auto& [g, w] : open) {
            if (evaluate_word(sym, domain, img, w) !=
                evaluate_word(sym, domain, img, Word::generator(g))) {
              ok = false;
              return;
            }
          }
        },
        bounds);
    if (!ok) {
      log.push_back(std::string(name) + ": NOT the identity at degree " + std::to_string(d));
      return false;
    }
  }
  log.push_back(std::string(name) + ": identity on generators (semantic, degrees " +
                degree_list(degrees) + ")");
  return true;
}

}  // namespace

std::string to_string(VKForm f) {
  switch (f) {
    case VKForm::i: return "i";
    case VKForm::ii: return "ii";
    case VKForm::iii: return "iii";
    case VKForm::iv: return "iv";
  }
  return "?";
}

VKForm parse_vk_form(std::string_view text) {
  if (text == "i") return VKForm::i;
  if (text == "ii") return VKForm::ii;
  if (text == "iii") return VKForm::iii;
  if (text == "iv") return VKForm::iv;
  throw InputError("unknown VK form '" + std::string(text) + "' (expected i, ii, iii or iv)");
}

void VKData::validate() const {
  if (legs.empty()) throw InputError("VK data needs at least one leg");
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const auto& leg = legs[k];
    const std::string where = "VK leg " + std::to_string(k + 1);
    if (leg.psi.source() != leg.group || leg.phi.source() != leg.group) {
      throw InputError(where + ": maps do not start at the leg group");
    }
    if (leg.psi.target() != pi) throw InputError(where + ": psi does not land in pi");
    if (leg.phi.target() != pi_prime) throw InputError(where + ": phi does not land in pi'");
  }
}

VKData VKData::from_groups(const GroupSpec& pi, const GroupSpec& pi_prime,
                           const std::vector<GroupLeg>& legs) {
  VKData data{pi.presentation(), pi_prime.presentation(), {}};
  for (const auto& leg : legs) {
    data.legs.push_back({leg.group.presentation(), Homo::between(leg.group, pi, leg.psi),
                         Homo::between(leg.group, pi_prime, leg.phi)});
  }
  data.validate();
  return data;
}

Word FreeLetters::v(int j) const {
  if (j < 1 || j > s) throw InputError("v index out of range");
  if (j == 1) return {};
  return Word::generator({"F", "v" + std::to_string(j)});
}

Word FreeLetters::u(int i, int j) const { return v(i).inverse() * v(j); }

FreeLetters build_F(int s) {
  if (s < 1) throw InputError("build_F needs s >= 1");
  std::vector<GeneratorSymbol> gens;
  for (int j = 2; j <= s; ++j) gens.push_back({"F", "v" + std::to_string(j)});
  return {Presentation(std::move(gens), {}), s};
}

VKGroup vk_build(const VKData& data, VKForm form) {
  data.validate();
  const int s = static_cast<int>(data.legs.size());
  const FreeLetters f = build_F(s);
  const Presentation L = data.pi.retagged("L");

  // psi_i(a) = v_i^-1 phi_i(a) v_i, for legs in [first, s].
  auto twisted = [&](int first, std::string_view rtag) {
    std::vector<std::pair<Word, Word>> pairs;
    for (int i = first; i <= s; ++i) {
      const auto& leg = data.legs[static_cast<std::size_t>(i - 1)];
      for (const auto& a : leg.group.generators()) {
        pairs.emplace_back(leg.psi.image(a).retagged("L"),
                           f.v(i).inverse() * leg.phi.image(a).retagged(rtag) * f.v(i));
      }
    }
    return pairs;
  };

  VKGroup out;
  switch (form) {
    case VKForm::i: {
      const Presentation base = free_product(free_product(L, data.pi_prime.retagged("R")), f.presentation);
      out.presentation = quotient_by_relations(base, twisted(1, "R"));
      out.pi_embedding = tag_embedding(data.pi, "L");
      out.pi_prime_embedding = tag_embedding(data.pi_prime, "R");
      break;
    }
    case VKForm::ii: {
      Presentation base = L;
      for (int i = 1; i <= s; ++i) base = free_product(base, data.pi_prime.retagged(copy_tag(i)));
      base = free_product(base, f.presentation);
      auto pairs = conjugation_relations(data.pi_prime, f, [](int i, const GeneratorSymbol& y) {
        return Word::generator(y.retagged(copy_tag(i)));
      });
      for (int i = 1; i <= s; ++i) {
        const auto& leg = data.legs[static_cast<std::size_t>(i - 1)];
        for (const auto& a : leg.group.generators()) {
          pairs.emplace_back(leg.psi.image(a).retagged("L"), leg.phi.image(a).retagged(copy_tag(i)));
        }
      }
      out.presentation = quotient_by_relations(base, pairs);
      out.pi_embedding = tag_embedding(data.pi, "L");
      out.pi_prime_embedding = tag_embedding(data.pi_prime, copy_tag(1));
      break;
    }
    case VKForm::iii: {
      const auto& first = data.legs.front();
      const Presentation glued = fibered_coproduct(L, data.pi_prime.retagged("R"), first.psi.retargeted("L"),
                                                   first.phi.retargeted("R"));
      out.presentation = quotient_by_relations(free_product(f.presentation, glued), twisted(2, "R"));
      out.pi_embedding = tag_embedding(data.pi, "L");
      out.pi_prime_embedding = tag_embedding(data.pi_prime, "R");
      break;
    }
    case VKForm::iv: {
      auto leg_group = [&](int i) {
        const auto& leg = data.legs[static_cast<std::size_t>(i - 1)];
        return fibered_coproduct(L, data.pi_prime.retagged("R"), leg.psi.retargeted("L"), leg.phi.retargeted("R"))
            .retagged("Q" + std::to_string(i));
      };
      auto pi_in = [&](int i) {
        std::map<GeneratorSymbol, Word> e;
        for (const auto& x : data.pi.generators()) {
          e[x] = Word::generator(x.retagged("L").retagged("Q" + std::to_string(i)));
        }
        return e;
      };
      Presentation acc = leg_group(1);
      for (int i = 2; i <= s; ++i) {
        const Presentation qi = leg_group(i);
        acc = fibered_coproduct(acc, qi, Homo::into(data.pi, acc, pi_in(1)), Homo::into(data.pi, qi, pi_in(i)));
      }
      auto in_copy = [](int i, const GeneratorSymbol& y) {
        return Word::generator(y.retagged("R").retagged("Q" + std::to_string(i)));
      };
      out.presentation = quotient_by_relations(free_product(f.presentation, acc),
                                               conjugation_relations(data.pi_prime, f, in_copy));
      out.pi_embedding = pi_in(1);
      for (const auto& y : data.pi_prime.generators()) out.pi_prime_embedding[y] = in_copy(1, y);
      break;
    }
  }
  return out;
}

MapPair copies_pair(const Presentation& pi_prime, int s) {
  const FreeLetters f = build_F(s);
  const Presentation first = free_product(pi_prime.retagged("R"), f.presentation);
  Presentation second;
  for (int i = 1; i <= s; ++i) second = free_product(second, pi_prime.retagged(copy_tag(i)));
  second = free_product(second, f.presentation);
  second = quotient_by_relations(second, conjugation_relations(pi_prime, f, [](int i, const GeneratorSymbol& y) {
                                   return Word::generator(y.retagged(copy_tag(i)));
                                 }));

  std::map<GeneratorSymbol, Word> fwd;
  std::map<GeneratorSymbol, Word> bwd;
  for (const auto& y : pi_prime.generators()) {
    fwd[y.retagged("R")] = Word::generator(y.retagged(copy_tag(1)));
    for (int j = 1; j <= s; ++j) {
      bwd[y.retagged(copy_tag(j))] = f.v(j).inverse() * Word::generator(y.retagged("R")) * f.v(j);
    }
  }
  for (const auto& v : f.presentation.generators()) {
    fwd[v] = Word::generator(v);
    bwd[v] = Word::generator(v);
  }
  return {first, second, Homo::into(first, second, fwd), Homo::into(second, first, bwd)};
}

MapPair vk_form_pair(const VKData& data) {
  const int s = static_cast<int>(data.legs.size());
  const FreeLetters f = build_F(s);
  const Presentation first = vk_build(data, VKForm::i).presentation;
  const Presentation second = vk_build(data, VKForm::ii).presentation;
  std::map<GeneratorSymbol, Word> fwd;
  std::map<GeneratorSymbol, Word> bwd;
  for (const auto& x : data.pi.generators()) {
    fwd[x.retagged("L")] = Word::generator(x.retagged("L"));
    bwd[x.retagged("L")] = Word::generator(x.retagged("L"));
  }
  for (const auto& y : data.pi_prime.generators()) {
    fwd[y.retagged("R")] = Word::generator(y.retagged(copy_tag(1)));
    for (int j = 1; j <= s; ++j) {
      bwd[y.retagged(copy_tag(j))] = f.v(j).inverse() * Word::generator(y.retagged("R")) * f.v(j);
    }
  }
  for (const auto& v : f.presentation.generators()) {
    fwd[v] = Word::generator(v);
    bwd[v] = Word::generator(v);
  }
  return {first, second, Homo::into(first, second, fwd), Homo::into(second, first, bwd)};
}

bool EquivalenceReport::counts_agree() const {
  std::map<int, std::uint64_t> reference;
  for (const auto& [form, per_degree] : counts) {
    for (const auto& [d, c] : per_degree) {
      auto [it, inserted] = reference.emplace(d, c);
      if (!inserted && it->second != c) return false;
    }
  }
  return true;
}

bool check_map_pair(const MapPair& pair, std::span<const int> degrees, const Bounds& bounds,
                    std::vector<std::string>& log) {
  bool ok = check_homo(pair.forward, "forward map", degrees, bounds, log);
  ok = check_homo(pair.backward, "backward map", degrees, bounds, log) && ok;
  ok = check_round_trip(pair.first, pair.forward, pair.backward, "backward after forward", degrees,
                        bounds, log) && ok;
  ok = check_round_trip(pair.second, pair.backward, pair.forward, "forward after backward", degrees,
                        bounds, log) && ok;
  return ok;
}

EquivalenceReport verify_copies_equivalence(const Presentation& pi_prime, int s,
                                            std::span<const int> degrees, const Bounds& bounds) {
  EquivalenceReport report;
  const MapPair pair = copies_pair(pi_prime, s);
  for (int d : degrees) {
    report.counts["i"][d] = count_homs(pair.first, d, bounds);
    report.counts["ii"][d] = count_homs(pair.second, d, bounds);
  }
  report.maps_checked = check_map_pair(pair, degrees, bounds, report.checks);
  return report;
}

EquivalenceReport verify_vk_forms(const VKData& data, std::span<const int> degrees, const Bounds& bounds) {
  EquivalenceReport report;
  for (VKForm form : kAllVKForms) {
    const Presentation p = vk_build(data, form).presentation;
    for (int d : degrees) report.counts[to_string(form)][d] = count_homs(p, d, bounds);
  }
  report.maps_checked = check_map_pair(vk_form_pair(data), degrees, bounds, report.checks);
  return report;
}

}  // namespace noohi
