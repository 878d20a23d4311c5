#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symref/group.hpp"

using namespace symref;
namespace mx = symref::matrices;

namespace {

std::vector<MatrixGQ> paper_generators() {
  return {kronecker(mx::quaternion_i(), mx::id2()), kronecker(mx::quaternion_j(), mx::id2()),
          kronecker(mx::id2(), mx::dihedral_rho()), kronecker(mx::id2(), mx::dihedral_sigma())};
}

std::vector<oracle::GMat> oracle_group() {
  std::vector<oracle::GMat> gens;
  for (const auto& g : paper_generators()) gens.push_back(oracle::from_library(g));
  return oracle::closure(gens);
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("closure examples") {
    const std::vector<MatrixGQ> trivial = {mx::id2()};
    CHECK(close_group(trivial).order() == 1);
    const std::vector<MatrixGQ> q8 = {mx::quaternion_i(), mx::quaternion_j()};
    CHECK(close_group(q8).order() == 8);
    CHECK(close_group(paper_generators()).order() == 32);
  }

  TEST_CASE("closure agrees with the brute-force oracle element for element") {
    const auto g = close_group(paper_generators());
    const auto ref = oracle_group();
    REQUIRE(ref.size() == 32);
    for (const auto& m : ref) {
      bool found = false;
      for (const auto& x : g.matrices()) found = found || oracle::from_library(x) == m;
      CHECK(found);
    }
  }

  TEST_CASE("closure errors") {
    const std::vector<MatrixGQ> infinite = {MatrixGQ{{2, 0}, {0, Rational(1, 2)}}};
    CHECK_THROWS_AS(close_group(infinite, 50), ClosureExceedsCap);
    CHECK_THROWS_AS(close_group(paper_generators(), 31), ClosureExceedsCap);
    const std::vector<MatrixGQ> singular = {MatrixGQ{{1, 0}, {0, 0}}};
    CHECK_THROWS_AS(close_group(singular), NonInvertibleGenerator);
  }

  TEST_CASE("multiplication and inverse tables are consistent with matrices") {
    const auto& g = support::model().pg.group;
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      for (std::size_t b = 0; b < g.order(); b += 3) CHECK(g.matrix(g.multiply(a, b)) == g.matrix(a) * g.matrix(b));
    }
  }

  TEST_CASE("elements are in canonical order") {
    const auto& g = support::model().pg.group;
    for (std::size_t k = 1; k < g.order(); ++k)
      CHECK(canonical_compare(g.matrix(k - 1), g.matrix(k)) == std::strong_ordering::less);
  }

  TEST_CASE("minus identity is in the group and equals Id (x) rho^2") {
    const auto& pg = support::model().pg;
    CHECK(pg.group.matrix(pg.minus_identity) == -MatrixGQ::identity(4));
    CHECK(kronecker(mx::id2(), mx::dihedral_rho() * mx::dihedral_rho()) == -MatrixGQ::identity(4));
  }

  TEST_CASE("conjugacy classes agree with the oracle") {
    const auto& g = support::model().pg.group;
    const auto classes = conjugacy_classes(g);
    const auto ref = oracle::classes(oracle_group());
    CHECK(classes.size() == 17);
    CHECK(ref.size() == 17);
    std::multiset<std::size_t> sizes, ref_sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    for (const auto& c : ref) ref_sizes.insert(c.size());
    CHECK(sizes == ref_sizes);
    CHECK(sizes.count(1) == 2);
    CHECK(sizes.count(2) == 15);

    const auto lookup = class_lookup(g, classes);
    const auto r1 = g.index_of(kronecker(mx::quaternion_i(), mx::dihedral_rho()));
    const auto& cls = classes[lookup[r1]];
    CHECK(cls.size() == 2);
    CHECK(std::count(cls.members.begin(), cls.members.end(), g.index_of(-g.matrix(r1))) == 1);
    CHECK(classes[lookup[g.identity()]].size() == 1);
  }

  TEST_CASE("form preservation") {
    const auto& pg = support::model().pg;
    CHECK(preserves_form(pg.group, pg.omega));
    CHECK(pg.omega == kronecker(mx::omega2(), mx::id2()));
    const std::vector<MatrixGQ> trivial = {mx::id2()};
    CHECK(preserves_form(close_group(trivial), mx::omega2()));
    const MatrixGQ d = {{2, 0}, {0, Rational(1, 2)}};
    CHECK(d.transpose() * mx::omega2() * d == mx::omega2());
    CHECK_FALSE(preserves_form(pg.group, MatrixGQ::identity(4)));
  }

  TEST_CASE("center, commutator subgroup and abelianization") {
    const auto& g = support::model().pg.group;
    const auto s = structure(g);
    CHECK(s.center.size() == 2);
    const auto minus = g.index_of(-MatrixGQ::identity(4));
    CHECK(std::count(s.center.begin(), s.center.end(), minus) == 1);
    const auto i = g.index_of(kronecker(mx::quaternion_i(), mx::id2()));
    const auto j = g.index_of(kronecker(mx::quaternion_j(), mx::id2()));
    CHECK(g.commutator(i, j) == minus);
    CHECK(std::binary_search(s.commutator_subgroup.begin(), s.commutator_subgroup.end(), minus));
    CHECK(s.abelianization_order == 16);
  }
}
