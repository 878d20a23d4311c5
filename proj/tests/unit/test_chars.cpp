#include <bit>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symref/chars.hpp"

using namespace symref;
namespace mx = symref::matrices;

TEST_SUITE("chars") {
  TEST_CASE("linear characters match the sign-propagation oracle") {
    const auto& m = support::model();
    const auto& g = m.pg.group;
    const auto& cd = m.table.class_data;
    const auto lin = linear_characters(g, cd);
    REQUIRE(lin.size() == 16);
    CHECK(std::all_of(lin.front().values.begin(), lin.front().values.end(), [](auto v) { return v == 1; }));

    std::vector<oracle::GMat> gens = {oracle::from_library(kronecker(mx::quaternion_i(), mx::id2())),
                                      oracle::from_library(kronecker(mx::quaternion_j(), mx::id2())),
                                      oracle::from_library(kronecker(mx::id2(), mx::dihedral_rho())),
                                      oracle::from_library(kronecker(mx::id2(), mx::dihedral_sigma()))};
    const auto group = oracle::closure(gens);
    const auto ref = oracle::sign_characters(group, gens);
    CHECK(ref.size() == 16);

    std::set<std::vector<std::int64_t>> expected, got;
    for (const auto& sign : ref) {
      std::vector<std::int64_t> row;
      for (const auto& cls : cd.classes) row.push_back(sign.at(oracle::from_library(g.matrix(cls.representative))));
      expected.insert(row);
    }
    for (const auto& chi : lin) got.insert(chi.values);
    CHECK(got == expected);
  }

  TEST_CASE("linear characters are trivial on minus identity") {
    const auto& m = support::model();
    const auto cls = m.table.class_data.class_of[m.pg.minus_identity];
    for (std::size_t k = 0; k < m.table.linear_count; ++k) CHECK(m.table.rows[k][cls] == 1);
  }

  TEST_CASE("defining character traces") {
    const auto& m = support::model();
    const auto& cd = m.table.class_data;
    const auto chi = defining_character(m.pg.group, cd);
    CHECK(chi[cd.class_of[m.pg.group.identity()]] == 4);
    CHECK(chi[cd.class_of[m.pg.minus_identity]] == -4);
    for (std::size_t c = 0; c < cd.count(); ++c) {
      if (cd.classes[c].size() == 2) CHECK(chi[c] == 0);
      const auto t = oracle::trace(oracle::from_library(m.pg.group.matrix(cd.classes[c].representative)));
      CHECK(t.im == 0);
      CHECK(chi[c] == t.re);
    }
  }

  TEST_CASE("table dimensions and orthogonality") {
    const auto& t = support::model().table;
    CHECK(t.rows.size() == 17);
    CHECK(t.linear_count == 16);
    std::int64_t sum = 0;
    for (auto d : t.dims) sum += d * d;
    CHECK(sum == 32);
    CHECK(t.dims.back() == 4);
    const auto& v = t.rows.back();
    CHECK(weighted_pairing(v, v, t.class_data) == 32);
    CHECK(weighted_pairing(t.rows.front(), v, t.class_data) == 0);
    for (std::size_t a = 0; a < t.rows.size(); ++a)
      for (std::size_t b = 0; b < t.rows.size(); ++b)
        CHECK(weighted_pairing(t.rows[a], t.rows[b], t.class_data) == (a == b ? 32 : 0));
  }

  TEST_CASE("linear characters restricted to R1..R5 are the even sign vectors") {
    const auto& m = support::model();
    std::set<std::vector<std::int64_t>> restricted;
    for (std::size_t k = 0; k < m.table.linear_count; ++k) {
      std::vector<std::int64_t> v;
      for (auto cls : m.labels.class_index) v.push_back(m.table.rows[k][cls]);
      restricted.insert(v);
    }
    std::set<std::vector<std::int64_t>> even;
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      std::vector<std::int64_t> v;
      for (unsigned k = 0; k < 5; ++k) v.push_back((mask >> k) & 1u ? -1 : 1);
      even.insert(v);
    }
    CHECK(restricted == even);
  }

  TEST_CASE("subrepresentation enumerator") {
    const auto& t = support::model().table;
    const SubrepEnumerator e(t);
    CHECK(e.count() == 327678);
    CHECK(e.tuple_count() == 5ull * (1ull << 16));

    MultiplicityVector trivial{std::vector<std::uint8_t>(17, 0)};
    trivial.m[0] = 1;
    CHECK(e.character(trivial).values == std::vector<std::int64_t>(17, 1));

    MultiplicityVector full{std::vector<std::uint8_t>(17, 1)};
    full.m[16] = 4;
    const auto regular = e.character(full);
    for (std::size_t c = 0; c < 17; ++c) CHECK(regular[c] == (c == t.identity_class ? 32 : 0));

    // Walk the whole range by increments and compare samples with direct decoding.
    const std::set<std::uint64_t> samples = {0, 1, 4, 5, 1000, 65535, 200000, 327677};
    std::uint64_t visited = 0;
    bool endpoints_seen = false;
    bool ordered = true;
    bool samples_match = true;
    MultiplicityVector previous;
    e.for_each(0, e.count(), [&](std::uint64_t index, const MultiplicityVector& mv) {
      ++visited;
      const bool zero = std::all_of(mv.m.begin(), mv.m.end(), [](auto x) { return x == 0; });
      endpoints_seen = endpoints_seen || zero || mv == full;
      if (!previous.m.empty()) ordered = ordered && previous.m < mv.m;
      if (samples.contains(index)) samples_match = samples_match && mv == e.at(index);
      previous = mv;
    });
    CHECK(visited == 327678);
    CHECK_FALSE(endpoints_seen);
    CHECK(ordered);
    CHECK(samples_match);
    CHECK_THROWS_AS(e.at(e.count()), ContractViolation);
  }
}
