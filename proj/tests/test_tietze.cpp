#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "noohi/homs.hpp"
#include "noohi/tietze.hpp"

using namespace noohi;

namespace {

GeneratorSymbol sym(const char* s) { return GeneratorSymbol::parse(s); }
Word gen(const char* s, int e = 1) { return Word::generator(sym(s), e); }

}  // namespace

TEST_CASE("a generator defined by a relator is eliminated") {
  // b = a, a^3 b^-1 a  ->  one generator, relator a^3
  const Presentation p({sym("a"), sym("b")}, {gen("b") * gen("a", -1), gen("a", 3) * gen("b", -1) * gen("a")});
  const Presentation s = tietze_simplify(p);
  CHECK(s.rank() == 1);
  REQUIRE(s.relators().size() == 1);
  CHECK(s.relators().front().length() == 3);
  for (int d = 1; d <= 4; ++d) CHECK(count_homs(s, d) == count_homs(p, d));
}

TEST_CASE("free groups are left alone") {
  const Presentation f = Presentation::free(3);
  CHECK(tietze_simplify(f) == f);
}

TEST_CASE("trivial and duplicate relators are removed") {
  const Presentation p({sym("a"), sym("b")},
                       {gen("a", 2) * gen("b", 2), gen("b", 2) * gen("a", 2), gen("b", -2) * gen("a", -2), Word{}});
  const Presentation s = tietze_simplify(p);
  CHECK(s.rank() == 2);
  CHECK(s.relators().size() == 1);
}

TEST_CASE("a VK-style presentation of Z collapses to one generator") {
  // <x, v | x = v^-1 x v, x> is the infinite cyclic group on v
  const Presentation p({sym("X.e"), sym("F.v2")}, {gen("X.e"), gen("X.e") * gen("F.v2", -1) * gen("X.e", -1) * gen("F.v2")});
  const Presentation s = tietze_simplify(p);
  CHECK(s.rank() == 1);
  CHECK(s.relators().empty());
}

TEST_CASE("simplification preserves hom counts on random presentations") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 40; ++trial) {
    const Presentation p = fixtures::random_presentation(rng);
    const Presentation s = tietze_simplify(p);
    CHECK(s.rank() <= p.rank());
    for (int d = 1; d <= 4; ++d) {
      CAPTURE(p);
      CAPTURE(s);
      CHECK(count_homs(s, d) == count_homs(p, d));
    }
  }
}

TEST_CASE("the length cap stops elimination without breaking equivalence") {
  const Presentation p({sym("a"), sym("b"), sym("c")},
                       {gen("a") * gen("b", -3) * gen("c", 2), gen("b") * gen("c") * gen("b") * gen("c", -1)});
  const Presentation capped = tietze_simplify(p, 1);
  for (int d = 1; d <= 4; ++d) CHECK(count_homs(capped, d) == count_homs(p, d));
}
