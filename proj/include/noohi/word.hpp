#ifndef NOOHI_WORD_HPP
#define NOOHI_WORD_HPP

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace noohi {

/// A generator name inside a namespace. Namespaces are `/`-separated tags
/// added by the construction that owns the generator; the name itself never
/// contains a dot. Rendered as `ns.name` (or just `name` for an empty namespace).
struct GeneratorSymbol {
  std::string ns;
  std::string name;

  auto operator<=>(const GeneratorSymbol&) const = default;

  std::string str() const;
  static GeneratorSymbol parse(std::string_view text);

  /// Returns the symbol moved under `tag`: `a.x` becomes `tag/a.x`.
  GeneratorSymbol retagged(std::string_view tag) const;
};

std::ostream& operator<<(std::ostream& os, const GeneratorSymbol& s);

struct Letter {
  GeneratorSymbol symbol;
  int exponent = 1;

  bool operator==(const Letter&) const = default;
};

/// A freely reduced word. Adjacent letters on the same symbol are always
/// merged and zero exponents dropped, so two words are equal as elements of
/// the free group iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(GeneratorSymbol symbol, int exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of absolute exponents.
  std::size_t length() const noexcept;

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  /// Conjugate of the word with its outer letters cancelled as far as possible.
  Word cyclically_reduced() const;

  bool contains(const GeneratorSymbol& s) const;
  /// Sum of the absolute exponents of the letters on `s`.
  std::size_t occurrences(const GeneratorSymbol& s) const;

  /// Replaces each symbol found in `images` by its image; other letters stay.
  Word substituted(const std::map<GeneratorSymbol, Word>& images) const;
  Word retagged(std::string_view tag) const;

  /// Rotations of the cyclically reduced word and of its inverse, at
  /// unit-letter granularity; returns the lexicographically least one. Two
  /// relators define the same normal closure member set iff their canonical
  /// cyclic forms coincide (up to this equivalence).
  Word canonical_cyclic() const;

  bool operator==(const Word&) const = default;
  bool operator<(const Word& rhs) const;

 private:
  void push(const Letter& l);

  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace noohi

#endif
