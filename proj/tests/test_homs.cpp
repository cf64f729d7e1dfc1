#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "noohi/errors.hpp"
#include "noohi/group_spec.hpp"
#include "noohi/homs.hpp"

using namespace noohi;

namespace {

GeneratorSymbol sym(const char* s) { return GeneratorSymbol::parse(s); }
Word gen(const char* s, int e = 1) { return Word::generator(sym(s), e); }

/// Transitive counts from all counts: h_n = sum_k C(n-1, k-1) t_k h_{n-k}.
std::vector<std::uint64_t> transitive_from_recurrence(const Presentation& p, int max_d) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(max_d) + 1, 1);
  std::vector<std::uint64_t> t(static_cast<std::size_t>(max_d) + 1, 0);
  for (int n = 1; n <= max_d; ++n) h[static_cast<std::size_t>(n)] = reference::count_homs(p, n);
  for (int n = 1; n <= max_d; ++n) {
    std::uint64_t rest = 0;
    for (int k = 1; k < n; ++k) {
      rest += fixtures::binomial(n - 1, k - 1) * t[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(n - k)];
    }
    t[static_cast<std::size_t>(n)] = h[static_cast<std::size_t>(n)] - rest;
  }
  return t;
}

}  // namespace

TEST_CASE("hom counts of small groups") {
  CHECK(count_homs(Presentation::free(1), 3) == 6);
  CHECK(count_homs(Presentation{}, 4) == 1);
  CHECK(count_homs(GroupSpec::cyclic(2).presentation(), 4) == 10);
  CHECK(count_homs(GroupSpec::cyclic(3).presentation(), 3) == 3);
  CHECK(count_homs(GroupSpec::symmetric(3).presentation(), 3) == 10);
  CHECK(count_transitive_homs(Presentation::free(1), 2) == 1);
  CHECK(count_transitive_homs(Presentation{}, 2) == 0);
  CHECK(count_transitive_homs(GroupSpec::cyclic(2).presentation(), 2) == 1);
  CHECK(count_transitive_homs(Presentation{}, 1) == 1);
}

TEST_CASE("free groups count (d!)^r") {
  for (int r = 0; r <= 3; ++r) {
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t expected = 1;
      for (int k = 0; k < r; ++k) expected *= factorial(d);
      CHECK(count_homs(Presentation::free(r), d) == expected);
    }
  }
}

TEST_CASE("kernel agrees with the brute-force reference on random presentations") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Presentation p = fixtures::random_presentation(rng, 3, 4, 6);
    for (int d = 1; d <= 4; ++d) {
      CAPTURE(p);
      CAPTURE(d);
      CHECK(count_homs(p, d) == reference::count_homs(p, d));
      CHECK(count_transitive_homs(p, d) == reference::count_transitive_homs(p, d));
    }
  }
}

TEST_CASE("transitive counts satisfy the exponential-formula recurrence") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Presentation p = fixtures::random_presentation(rng, 2, 3, 5);
    const auto t = transitive_from_recurrence(p, 4);
    for (int d = 1; d <= 4; ++d) {
      CAPTURE(p);
      CHECK(count_transitive_homs(p, d) == t[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("free products multiply and quotients never increase counts") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const Presentation a = fixtures::random_presentation(rng, 2, 2, 4).retagged("a");
    const Presentation b = fixtures::random_presentation(rng, 2, 2, 4).retagged("b");
    const Presentation q = quotient_by_relations(a, {{Word::generator(a.generators().front()), Word{}}});
    for (int d = 1; d <= 4; ++d) {
      CHECK(count_homs(free_product(a, b), d) == count_homs(a, d) * count_homs(b, d));
      CHECK(count_homs(q, d) <= count_homs(a, d));
    }
  }
}

TEST_CASE("enumeration visits exactly the counted homomorphisms") {
  const Presentation p({sym("a"), sym("b")}, {gen("a", 2), gen("a") * gen("b") * gen("a", -1) * gen("b", -1)});
  const auto homs = all_homs(p, 3);
  CHECK(homs.size() == count_homs(p, 3));
  const auto& s3 = SymmetricGroup::of(3);
  for (const auto& h : homs) {
    for (const auto& r : p.relators()) CHECK(evaluate_word(s3, p, h, r) == SymmetricGroup::identity());
  }
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(count_homs(Presentation::free(1), 0), InputError);
  CHECK_THROWS_AS(count_homs(Presentation::free(1), 6), InputError);
  Bounds tight;
  tight.ceiling = 100;
  const Presentation linked({sym("a"), sym("b"), sym("c"), sym("d")},
                           {gen("a") * gen("b") * gen("c") * gen("d"), gen("a") * gen("c", 2)});
  CHECK_THROWS_AS(count_homs(linked, 4, tight), ResourceError);
  // loose generators are counted without search
  CHECK(count_homs(Presentation::free(4), 4, tight) == 24ull * 24 * 24 * 24);
  CHECK_THROWS_AS(reference::count_homs(Presentation::free(4), 4, tight), ResourceError);
  try {
    (void)reference::count_homs(Presentation::free(3), 4, tight);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.estimate() > 100.0);
  }
  Bounds wide;
  wide.max_degree = 6;
  CHECK(count_homs(Presentation::free(1), 6, wide) == 720);
}

TEST_CASE("counts do not depend on the generator blocks being split") {
  // two independent relator blocks plus a loose generator
  const Presentation p({sym("a"), sym("b"), sym("c")}, {gen("a", 2), gen("b", 3)});
  for (int d = 1; d <= 4; ++d) {
    CHECK(count_homs(p, d) == count_homs(GroupSpec::cyclic(2).presentation(), d) *
                                  count_homs(GroupSpec::cyclic(3).presentation(), d) * factorial(d));
  }
  CHECK(hom_search_estimate(p, 3) == doctest::Approx(6.0 + 6.0));
}
