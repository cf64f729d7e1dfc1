#include <doctest.h>

#include <array>
#include <random>

#include "fixtures.hpp"
#include "noohi/errors.hpp"
#include "noohi/homs.hpp"
#include "noohi/vk.hpp"

using namespace noohi;

namespace {

const std::array<int, 2> kDegrees{2, 3};

VKData all_trivial(int s) {
  return fixtures::grid_vk_data(GroupSpec::trivial(), GroupSpec::trivial(), GroupSpec::trivial(), s);
}

}  // namespace

TEST_CASE("the free letters") {
  CHECK_THROWS_AS(build_F(0), InputError);
  CHECK(build_F(1).presentation.rank() == 0);
  const FreeLetters f = build_F(3);
  CHECK(f.presentation.rank() == 2);
  CHECK(count_homs(f.presentation, 2) == 4);
  CHECK(f.u(1, 3) == f.v(3));
  CHECK(f.u(2, 2).empty());
  CHECK(f.u(2, 3) == f.v(2).inverse() * f.v(3));
}

TEST_CASE("u_ij satisfy the cocycle relations in every action") {
  const FreeLetters f = build_F(3);
  std::mt19937_64 rng(5);
  const auto& s4 = SymmetricGroup::of(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SymIndex> images;
    for (std::size_t k = 0; k < f.presentation.rank(); ++k) {
      images.push_back(static_cast<SymIndex>(std::uniform_int_distribution<int>(0, 23)(rng)));
    }
    auto ev = [&](const Word& w) { return evaluate_word(s4, f.presentation, images, w); };
    for (int i = 1; i <= 3; ++i) {
      CHECK(ev(f.u(i, i)) == SymmetricGroup::identity());
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) CHECK(s4.mul(ev(f.u(i, j)), ev(f.u(j, k))) == ev(f.u(i, k)));
      }
    }
  }
}

TEST_CASE("degenerate VK groups") {
  const VKData one_leg = fixtures::grid_vk_data(GroupSpec::cyclic(2), GroupSpec::cyclic(2), GroupSpec::cyclic(2), 1);
  const auto glued = count_homs(vk_build(one_leg, VKForm::i).presentation, 3);
  for (VKForm form : kAllVKForms) CHECK(count_homs(vk_build(one_leg, form).presentation, 3) == glued);
  CHECK(glued == 4);

  const VKData trivial = all_trivial(3);
  for (VKForm form : kAllVKForms) {
    for (int d = 1; d <= 3; ++d) CHECK(count_homs(vk_build(trivial, form).presentation, d) == factorial(d) * factorial(d));
  }
  const VKData two = all_trivial(2);
  for (VKForm form : kAllVKForms) CHECK(count_homs(vk_build(two, form).presentation, 3) == 6);
}

TEST_CASE("trivial legs give pi * pi' * F") {
  const VKData data = fixtures::grid_vk_data(GroupSpec::cyclic(2), GroupSpec::trivial(), GroupSpec::trivial(), 2);
  CHECK(count_homs(vk_build(data, VKForm::i).presentation, 3) == 4 * 6);
  const VKData data3 = fixtures::grid_vk_data(GroupSpec::cyclic(3), GroupSpec::cyclic(2), GroupSpec::trivial(), 3);
  for (int d = 2; d <= 3; ++d) {
    CHECK(count_homs(vk_build(data3, VKForm::i).presentation, d) ==
          count_homs(GroupSpec::cyclic(3).presentation(), d) * count_homs(GroupSpec::cyclic(2).presentation(), d) *
              factorial(d) * factorial(d));
  }
}

TEST_CASE("the copies presentation is equivalent to pi' * F") {
  const auto trivial = verify_copies_equivalence(GroupSpec::trivial().presentation(), 2, kDegrees);
  CHECK(trivial.passed());
  for (auto [g, s] : {std::pair{GroupSpec::cyclic(2), 2}, std::pair{GroupSpec::cyclic(3), 3},
                      std::pair{GroupSpec::symmetric(3), 2}}) {
    const auto r = verify_copies_equivalence(g.presentation(), s, kDegrees);
    CAPTURE(g.describe());
    CHECK(r.maps_checked);
    CHECK(r.counts_agree());
    CHECK(r.counts.at("i").at(2) == count_homs(g.presentation(), 2) * (s == 2 ? 2u : 4u));
  }
}

TEST_CASE("all four forms agree with explicit maps between i and ii") {
  const auto groups = fixtures::small_groups();
  for (const auto& pi : groups) {
    for (const auto& leg : groups) {
      const VKData data = fixtures::grid_vk_data(pi, GroupSpec::cyclic(2), leg, 2);
      const auto r = verify_vk_forms(data, kDegrees);
      CAPTURE(pi.describe());
      CAPTURE(leg.describe());
      CHECK(r.passed());
      CHECK(r.counts.size() == 4);
    }
  }
}

TEST_CASE("a leg that misses its targets is rejected") {
  VKData data = all_trivial(1);
  data.pi = GroupSpec::cyclic(2).presentation();
  CHECK_THROWS_AS(data.validate(), InputError);
  CHECK_THROWS_AS(vk_build(VKData{}, VKForm::i), InputError);
  CHECK(to_string(parse_vk_form("iii")) == "iii");
  CHECK_THROWS_AS(parse_vk_form("v"), InputError);
}
