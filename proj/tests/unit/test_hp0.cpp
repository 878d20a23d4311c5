#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symref/hp0.hpp"

using namespace symref;
namespace mx = symref::matrices;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned degree, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), var(0, static_cast<int>(nvars) - 1);
  Poly f(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial::Exponents e{};
    for (unsigned k = 0; k < degree; ++k) ++e[var(rng)];
    f += Poly::monomial(nvars, Monomial::pack(e), GaussianRational(Rational(coeff(rng)), Rational(coeff(rng))));
  }
  return f;
}

GaussianRational evaluate(const Poly& f, const VectorGQ& x) {
  GaussianRational total;
  for (const auto& [key, c] : f.terms()) {
    GaussianRational term = c;
    for (std::size_t v = 0; v < f.nvars(); ++v)
      for (unsigned k = 0; k < Monomial::exponent(key, v); ++k) term *= x[v];
    total += term;
  }
  return total;
}

std::vector<oracle::GMat> oracle_group() {
  std::vector<oracle::GMat> out;
  for (const auto& m : support::model().pg.group.matrices()) out.push_back(oracle::from_library(m));
  return out;
}

FiniteMatrixGroup kleinian_a1() {
  const std::vector<MatrixGQ> gens = {-mx::id2()};
  return close_group(gens);
}

}  // namespace

TEST_SUITE("hp0") {
  TEST_CASE("molien examples and the power-sum oracle") {
    const auto& g = support::model().pg.group;
    const auto dims = molien_dims(g, 24);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 0);
    const auto ref = oracle::molien_by_power_sums(oracle_group(), 24);
    for (unsigned d = 0; d <= 24; ++d) CHECK(static_cast<long>(dims[d]) == ref[d]);
  }

  TEST_CASE("reynolds bases match molien and are invariant") {
    const auto& g = support::model().pg.group;
    const auto dims = molien_dims(g, 10);
    for (unsigned d = 0; d <= 10; ++d) {
      const auto basis = invariant_basis(g, d, 2);
      CHECK(basis.size() == dims[d]);
      for (const auto& f : basis) {
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == d);
        CHECK(is_invariant(g, f));
        CHECK(reynolds(g, f) == f);
      }
    }
    CHECK(invariant_basis(g, 0).size() == 1);
    CHECK(invariant_basis(g, 1).empty());
    CHECK(invariant_basis(g, 2).empty());
  }

  TEST_CASE("substitution agrees with pointwise evaluation") {
    std::mt19937_64 rng(37);
    const auto& g = support::model().pg.group;
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_poly(rng, 4, 3, 6);
      const auto& a = g.matrix(static_cast<std::size_t>(trial) % g.order());
      const MatrixGQ generic = {{1, 2, 0, -1}, {0, 1, 3, 0}, {2, 0, 1, 1}, {1, 1, 1, 0}};
      VectorGQ x(4);
      for (auto& v : x) v = GaussianRational(Rational(d(rng)), Rational(d(rng)));
      CHECK(evaluate(substitute(a, f), x) == evaluate(f, a * x));
      CHECK(evaluate(substitute(generic, f), x) == evaluate(f, generic * x));
    }
  }

  TEST_CASE("poisson bracket basics") {
    const auto& pg = support::model().pg;
    const auto pi = PoissonStructure::from_form(pg.omega);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        CHECK(pi.bracket(Poly::variable(4, a), Poly::variable(4, b)) == Poly::constant(4, pi.bivector()(a, b)));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_poly(rng, 4, 3, 5);
      CHECK(pi.bracket(f, f).is_zero());
    }
    CHECK_THROWS_AS(PoissonStructure(MatrixGQ::identity(4)), ContractViolation);
  }

  TEST_CASE("bracket is equivariant under the generators") {
    const auto& pg = support::model().pg;
    const auto pi = PoissonStructure::from_form(pg.omega);
    const std::vector<MatrixGQ> gens = {
        kronecker(mx::quaternion_i(), mx::id2()), kronecker(mx::quaternion_j(), mx::id2()),
        kronecker(mx::id2(), mx::dihedral_rho()), kronecker(mx::id2(), mx::dihedral_sigma())};
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_poly(rng, 4, 2 + trial % 2, 5);
      const auto h = random_poly(rng, 4, 3, 5);
      for (const auto& gm : gens)
        CHECK(substitute(gm, pi.bracket(f, h)) == pi.bracket(substitute(gm, f), substitute(gm, h)));
    }
  }

  TEST_CASE("jacobi identity") {
    const auto pi = PoissonStructure::from_form(support::model().pg.omega);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_poly(rng, 4, 2, 4), g = random_poly(rng, 4, 3, 4), h = random_poly(rng, 4, 2, 4);
      const auto j = pi.bracket(f, pi.bracket(g, h)) + pi.bracket(g, pi.bracket(h, f)) + pi.bracket(h, pi.bracket(f, g));
      CHECK(j.is_zero());
    }
  }

  TEST_CASE("low degrees of HP0 and independence from the worker count") {
    const auto& pg = support::model().pg;
    const auto one = hp0_graded_dims(pg.group, pg.omega, 10, 1);
    const auto four = hp0_graded_dims(pg.group, pg.omega, 10, 4);
    CHECK(one.per_degree[0].hp0_dim == 1);
    CHECK(one.per_degree[1].hp0_dim == 0);
    CHECK(one.sampled_brackets_invariant);
    REQUIRE(one.per_degree.size() == four.per_degree.size());
    for (std::size_t d = 0; d < one.per_degree.size(); ++d) {
      CHECK(one.per_degree[d].invariant_dim == four.per_degree[d].invariant_dim);
      CHECK(one.per_degree[d].bracket_span_dim == four.per_degree[d].bracket_span_dim);
      CHECK(one.per_degree[d].brackets_evaluated == four.per_degree[d].brackets_evaluated);
      CHECK(one.per_degree[d].bracket_span_dim + one.per_degree[d].hp0_dim == one.per_degree[d].invariant_dim);
    }
    CHECK(one.cumulative_hp0 == four.cumulative_hp0);
    CHECK_THROWS_AS(hp0_graded_dims(pg.group, pg.omega, 1), ContractViolation);
  }

  TEST_CASE("kleinian A1 sanity case") {
    const auto g = kleinian_a1();
    const auto dims = hp0_graded_dims(g, mx::omega2(), 12, 2);
    CHECK(dims.cumulative_hp0 == 1);
    CHECK(dims.stabilized);
    const auto molien = molien_dims(g, 8);
    for (unsigned d = 0; d <= 8; ++d) CHECK(molien[d] == (d % 2 == 0 ? d + 1 : 0));
  }

  TEST_CASE("invertible class census against determinants") {
    const auto& m = support::model();
    const auto& g = m.pg.group;
    const auto ref = oracle::classes(oracle_group());
    std::size_t expected = 0;
    for (const auto& cls : ref) {
      const auto rep = *cls.begin();
      const auto d = oracle::det(rep - oracle::identity(4));
      if (d.re != 0 || d.im != 0) ++expected;
    }
    CHECK(invertible_class_count(g, m.table.class_data.classes) == expected);
    CHECK_FALSE(is_zero(determinant(g.matrix(m.pg.minus_identity) - MatrixGQ::identity(4))));
    CHECK(is_zero(determinant(g.matrix(g.identity()) - MatrixGQ::identity(4))));
  }
}
