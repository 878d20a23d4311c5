#include <set>

#include "doctest.h"
#include "support.hpp"
#include "symref/autos.hpp"

using namespace symref;
namespace mx = symref::matrices;

namespace {

const std::vector<GroupAutomorphism>& autos() {
  static const auto all = automorphism_group(support::model().pg.group, kDefaultAutSearchCap, 4);
  return all;
}

const AutReport& report() {
  static const auto r = out_action_on_reflections(support::model().pg.group, support::model().table.class_data,
                                                  support::model().labels, autos());
  return r;
}

bool contains(const GroupAutomorphism& a) { return std::binary_search(autos().begin(), autos().end(), a); }

}  // namespace

TEST_SUITE("autos") {
  TEST_CASE("greedy generating tuple generates and is irredundant") {
    const auto& g = support::model().pg.group;
    const auto gens = greedy_generating_tuple(g);
    CHECK(g.generated_subgroup(gens).size() == g.order());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto rest = gens;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(g.generated_subgroup(rest).size() < g.order());
    }
  }

  TEST_CASE("identity and inner automorphisms are found") {
    const auto& g = support::model().pg.group;
    GroupAutomorphism id{std::vector<std::size_t>(g.order())};
    for (std::size_t x = 0; x < g.order(); ++x) id.perm[x] = x;
    CHECK(contains(id));
    std::set<GroupAutomorphism> inner;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const auto c = conjugation(g, h);
      CHECK(contains(c));
      inner.insert(c);
    }
    CHECK(inner.size() == 16);
  }

  TEST_CASE("automorphism count and validity") {
    const auto& g = support::model().pg.group;
    CHECK(autos().size() == 1920);
    CHECK(std::is_sorted(autos().begin(), autos().end()));
    for (std::size_t k = 0; k < autos().size(); k += 97) CHECK(is_automorphism(g, autos()[k]));
    GroupAutomorphism swap{autos().front().perm};
    std::swap(swap.perm[1], swap.perm[2]);
    CHECK_FALSE(is_automorphism(g, swap));
  }

  TEST_CASE("search space cap") {
    CHECK_THROWS_AS(automorphism_group(support::model().pg.group, 1000), SearchSpaceExceeded);
  }

  TEST_CASE("composition and inversion helpers") {
    const auto& a = autos()[5];
    const auto& b = autos()[1234];
    CHECK(contains(compose(a, b)));
    CHECK(contains(invert(a)));
    const auto id = compose(a, invert(a));
    for (std::size_t x = 0; x < id.perm.size(); ++x) CHECK(id(x) == x);
  }

  TEST_CASE("cycle notation") {
    CHECK(cycle_notation({0, 1, 2, 3, 4}) == "()");
    CHECK(cycle_notation({1, 0, 2, 3, 4}) == "(R1 R2)");
    CHECK(cycle_notation({1, 2, 0, 4, 3}) == "(R1 R2 R3)(R4 R5)");
  }

  TEST_CASE("action on the reflection classes is onto S5 with inner kernel") {
    const auto& r = report();
    CHECK(r.aut_order == 1920);
    CHECK(r.inner_order == 16);
    CHECK(r.out_order == 120);
    CHECK(r.reflection_action_image_order == 120);
    CHECK(r.is_full_s5);
    CHECK(r.kernel_equals_inner);
    CHECK(r.closed_under_composition);
    CHECK(r.closed_under_inverse);
    const auto& g = support::model().pg.group;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const auto it = std::lower_bound(autos().begin(), autos().end(), conjugation(g, h));
      CHECK(r.action[static_cast<std::size_t>(it - autos().begin())] == Permutation5{0, 1, 2, 3, 4});
    }
  }

  TEST_CASE("factor-preserving automorphisms preserve {R1,R2,R3} and {R4,R5}") {
    const auto& g = support::model().pg.group;
    std::set<std::size_t> q8_factor;
    for (const auto& q : {mx::id2(), mx::quaternion_i(), mx::quaternion_j(), mx::quaternion_k()}) {
      q8_factor.insert(g.index_of(kronecker(q, mx::id2())));
      q8_factor.insert(g.index_of(kronecker(-q, mx::id2())));
    }
    std::set<Permutation5> image;
    std::size_t preserving = 0;
    for (std::size_t k = 0; k < autos().size(); ++k) {
      const bool keeps = std::all_of(q8_factor.begin(), q8_factor.end(),
                                     [&](std::size_t x) { return q8_factor.contains(autos()[k](x)); });
      if (!keeps) continue;
      ++preserving;
      const auto& p = report().action[k];
      image.insert(p);
      for (std::size_t j = 0; j < 5; ++j) CHECK((j < 3) == (p[j] < 3));
    }
    CHECK(preserving > 16);
    CHECK(image.size() == 12);
  }
}
