#include "noohi/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <utility>

#include "noohi/errors.hpp"

namespace noohi {

std::string GeneratorSymbol::str() const {
  return ns.empty() ? name : ns + "." + name;
}

GeneratorSymbol GeneratorSymbol::parse(std::string_view text) {
  auto dot = text.rfind('.');
  if (dot == std::string_view::npos) {
    if (text.empty()) throw InputError("empty generator symbol");
    return {"", std::string(text)};
  }
  if (dot + 1 == text.size() || dot == 0) {
    throw InputError("malformed generator symbol '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, dot)), std::string(text.substr(dot + 1))};
}

GeneratorSymbol GeneratorSymbol::retagged(std::string_view tag) const {
  if (tag.empty()) return *this;
  if (ns.empty()) return {std::string(tag), name};
  return {std::string(tag) + "/" + ns, name};
}

std::ostream& operator<<(std::ostream& os, const GeneratorSymbol& s) {
  return os << s.str();
}

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push(l);
}

Word Word::generator(GeneratorSymbol symbol, int exponent) {
  Word w;
  w.push({std::move(symbol), exponent});
  return w;
}

void Word::push(const Letter& l) {
  if (l.exponent == 0) return;
  if (!letters_.empty() && letters_.back().symbol == l.symbol) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back({it->symbol, -it->exponent});
  }
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w *= rhs;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) push(l);
  return *this;
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> ls = letters_;
  while (ls.size() >= 2 && ls.front().symbol == ls.back().symbol) {
    ls.front().exponent += ls.back().exponent;
    ls.pop_back();
    if (ls.front().exponent == 0) ls.erase(ls.begin());
  }
  Word w;
  w.letters_ = std::move(ls);
  return w;
}

bool Word::contains(const GeneratorSymbol& s) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [&](const Letter& l) { return l.symbol == s; });
}

std::size_t Word::occurrences(const GeneratorSymbol& s) const {
  std::size_t n = 0;
  for (const auto& l : letters_) {
    if (l.symbol == s) n += static_cast<std::size_t>(std::abs(l.exponent));
  }
  return n;
}

Word Word::substituted(const std::map<GeneratorSymbol, Word>& images) const {
  Word w;
  for (const auto& l : letters_) {
    auto it = images.find(l.symbol);
    if (it == images.end()) {
      w.push(l);
      continue;
    }
    const Word piece = l.exponent > 0 ? it->second : it->second.inverse();
    for (int k = 0; k < std::abs(l.exponent); ++k) w *= piece;
  }
  return w;
}

Word Word::retagged(std::string_view tag) const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (const auto& l : letters_) w.letters_.push_back({l.symbol.retagged(tag), l.exponent});
  return w;
}

namespace {

using Unit = std::pair<const GeneratorSymbol*, int>;

bool unit_less(const Unit& a, const Unit& b) {
  if (*a.first != *b.first) return *a.first < *b.first;
  return a.second < b.second;
}

std::vector<Unit> expand(const Word& w) {
  std::vector<Unit> units;
  for (const auto& l : w.letters()) {
    int sign = l.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exponent); ++k) units.emplace_back(&l.symbol, sign);
  }
  return units;
}

}  // namespace

Word Word::canonical_cyclic() const {
  const Word reduced = cyclically_reduced();
  if (reduced.empty()) return reduced;
  const Word inv = reduced.inverse();
  const auto fwd = expand(reduced);
  const auto bwd = expand(inv);
  const std::size_t n = fwd.size();

  const std::vector<Unit>* best_seq = &fwd;
  std::size_t best_shift = 0;
  auto rotation_less = [n](const std::vector<Unit>& a, std::size_t sa,
                           const std::vector<Unit>& b, std::size_t sb) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a[(sa + k) % n];
      const auto& y = b[(sb + k) % n];
      if (unit_less(x, y)) return true;
      if (unit_less(y, x)) return false;
    }
    return false;
  };
  for (const auto* seq : {&fwd, &bwd}) {
    for (std::size_t s = 0; s < n; ++s) {
      if (rotation_less(*seq, s, *best_seq, best_shift)) {
        best_seq = seq;
        best_shift = s;
      }
    }
  }
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& u = (*best_seq)[(best_shift + k) % n];
    letters.push_back({*u.first, u.second});
  }
  return Word(std::move(letters));
}

bool Word::operator<(const Word& rhs) const {
  return std::lexicographical_compare(
      letters_.begin(), letters_.end(), rhs.letters_.begin(), rhs.letters_.end(),
      [](const Letter& a, const Letter& b) {
        return std::tie(a.symbol, a.exponent) < std::tie(b.symbol, b.exponent);
      });
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  if (w.empty()) return os << "e";
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << l.symbol;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os;
}

}  // namespace noohi
