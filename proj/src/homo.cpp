#include "noohi/homo.hpp"

#include <set>
#include <sstream>

#include "noohi/errors.hpp"
#include "noohi/homs.hpp"

namespace noohi {

namespace {

void check_images(const Presentation& source, const Presentation& target,
                  const std::map<GeneratorSymbol, Word>& images) {
  for (const auto& g : source.generators()) {
    if (!images.count(g)) throw InputError("homomorphism: no image for generator '" + g.str() + "'");
  }
  for (const auto& [g, w] : images) {
    if (!source.has_generator(g)) {
      throw InputError("homomorphism: '" + g.str() + "' is not a source generator");
    }
    target.require_word(w, "homomorphism image of '" + g.str() + "'");
  }
}

}  // namespace

std::string to_string(HomoCheck c) {
  switch (c) {
    case HomoCheck::evaluated: return "evaluated";
    case HomoCheck::syntactic: return "syntactic";
    case HomoCheck::semantic: return "semantic";
    case HomoCheck::obligation: return "obligation";
  }
  return "?";
}

bool syntactically_trivial(const Presentation& p, const Word& w) {
  const Word c = w.cyclically_reduced();
  if (c.empty()) return true;
  const Word key = c.canonical_cyclic();
  for (const auto& r : p.relators()) {
    if (!r.empty() && r.canonical_cyclic() == key) return true;
  }
  return false;
}

Homo Homo::between(const GroupSpec& source, const GroupSpec& target,
                   std::map<GeneratorSymbol, Word> images) {
  Homo h;
  h.source_ = source.presentation();
  h.target_ = target.presentation();
  check_images(h.source_, h.target_, images);
  h.images_ = std::move(images);
  for (const auto& r : h.source_.relators()) {
    if (!is_identity(target.evaluate(h.apply(r)))) {
      std::ostringstream os;
      os << "homomorphism " << source.describe() << " -> " << target.describe()
         << " does not respect relator " << r;
      throw InputError(os.str());
    }
  }
  h.check_ = HomoCheck::evaluated;
  return h;
}

Homo Homo::into(const Presentation& source, const Presentation& target,
                std::map<GeneratorSymbol, Word> images) {
  Homo h;
  h.source_ = source;
  h.target_ = target;
  check_images(source, target, images);
  h.images_ = std::move(images);
  for (const auto& r : source.relators()) {
    if (!syntactically_trivial(target, h.apply(r))) h.obligations_.push_back(r);
  }
  h.check_ = h.obligations_.empty() ? HomoCheck::syntactic : HomoCheck::obligation;
  return h;
}

Word Homo::apply(const Word& w) const { return w.substituted(images_); }

Homo Homo::verified_semantically(std::span<const int> degrees, const Bounds& bounds) const {
  if (obligations_.empty()) return *this;
  for (int d : degrees) {
    const auto& sym = SymmetricGroup::of(d);
    std::vector<Word> images;
    for (const auto& r : obligations_) images.push_back(apply(r));
    for_each_hom(
        target_, d,
        [&](std::span<const SymIndex> img) {
          for (std::size_t k = 0; k < images.size(); ++k) {
            if (evaluate_word(sym, target_, img, images[k]) != SymmetricGroup::identity()) {
              std::ostringstream os;
              os << "homomorphism does not respect relator " << obligations_[k]
                 << " in a degree-" << d << " action of the target";
              throw InputError(os.str());
            }
          }
        },
        bounds);
  }
  Homo h = *this;
  h.obligations_.clear();
  h.check_ = HomoCheck::semantic;
  return h;
}

Homo Homo::retargeted(std::string_view tag) const {
  Homo h = *this;
  h.target_ = target_.retagged(tag);
  for (auto& [g, w] : h.images_) w = w.retagged(tag);
  return h;
}

Homo Homo::composed(const Presentation& new_target,
                    const std::map<GeneratorSymbol, Word>& embedding) const {
  std::map<GeneratorSymbol, Word> images;
  for (const auto& [g, w] : images_) images[g] = w.substituted(embedding);
  Homo h = Homo::into(source_, new_target, std::move(images));
  // Relators already discharged stay discharged under any homomorphism.
  if (check_ != HomoCheck::obligation) {
    h.obligations_.clear();
    if (h.check_ == HomoCheck::obligation) h.check_ = check_;
  }
  return h;
}

Presentation fibered_coproduct(const Presentation& p1, const Presentation& p2, const Homo& psi,
                               const Homo& phi) {
  if (psi.source() != phi.source()) throw InputError("fibered_coproduct: legs have different sources");
  if (psi.target() != p1) throw InputError("fibered_coproduct: first leg does not land in p1");
  if (phi.target() != p2) throw InputError("fibered_coproduct: second leg does not land in p2");
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& x : psi.source().generators()) pairs.emplace_back(psi.image(x), phi.image(x));
  return quotient_by_relations(free_product(p1, p2), pairs);
}

Presentation fibered_coproduct(const Presentation& p1, const Presentation& p2, const GroupSpec& a,
                               const Homo& psi, const Homo& phi) {
  if (psi.source() != a.presentation()) {
    throw InputError("fibered_coproduct: leg source differs from the base group");
  }
  return fibered_coproduct(p1, p2, psi, phi);
}

}  // namespace noohi
