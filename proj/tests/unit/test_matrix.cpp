#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symref/group.hpp"

using namespace symref;
namespace mx = symref::matrices;

namespace {

const GaussianRational kI = GaussianRational::i();

MatrixQ row_of_twos() { return MatrixQ{{2, 2, 2, 2, 2}}; }

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("kronecker examples") {
    CHECK(kronecker(mx::id2(), mx::id2()) == MatrixGQ::identity(4));
    const MatrixGQ expected = {{0, -kI, 0, 0}, {kI, 0, 0, 0}, {0, 0, 0, kI}, {0, 0, -kI, 0}};
    CHECK(kronecker(mx::quaternion_i(), mx::dihedral_rho()) == expected);
    CHECK(kronecker(mx::quaternion_i(), mx::dihedral_rho()) * kronecker(mx::quaternion_j(), mx::dihedral_sigma()) ==
          kronecker(mx::quaternion_i() * mx::quaternion_j(), mx::dihedral_rho() * mx::dihedral_sigma()));
  }

  TEST_CASE("kronecker entries match the index formula") {
    const MatrixGQ a = {{1, 2}, {kI, -3}};
    const MatrixGQ b = {{0, 1, 5}, {-kI, 2, 0}};
    const auto k = kronecker(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) CHECK(k(r, c) == a(r / 2, c / 3) * b(r % 2, c % 3));
  }

  TEST_CASE("rank examples") {
    CHECK(rank(MatrixGQ::identity(4)) == 4);
    CHECK(rank(kronecker(mx::quaternion_i(), mx::dihedral_rho()) - MatrixGQ::identity(4)) == 2);
    CHECK(rank(MatrixGQ(4, 4)) == 0);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(MatrixQ::identity(5)).empty());
    const auto k = kernel_basis(row_of_twos());
    REQUIRE(k.size() == 4);
    for (const auto& v : k) {
      Rational s;
      for (const auto& x : v) s += x;
      CHECK(is_zero(s));
    }
    MatrixQ basis(4, 5);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 5; ++c) basis(r, c) = k[r][c];
    CHECK(rank(basis) == 4);
  }

  TEST_CASE("kernel basis is canonical: unit on free columns") {
    const MatrixQ m = {{1, 2, 0, 3}, {2, 4, 1, 7}};
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == std::vector<Rational>{-2, 1, 0, 0});
    CHECK(k[1] == std::vector<Rational>{-3, 0, -1, 1});
  }

  TEST_CASE("determinant examples") {
    CHECK(determinant(MatrixGQ::identity(4)) == GaussianRational(1));
    CHECK(determinant(-MatrixGQ::identity(4) - MatrixGQ::identity(4)) == GaussianRational(16));
    CHECK(determinant(mx::dihedral_rho()) == GaussianRational(1));
  }

  TEST_CASE("rank and determinant agree with the fraction oracle") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dim(1, 5), inner(0, 5);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t rows = dim(rng), cols = dim(rng), k = inner(rng);
      // product of a rows x k and a k x cols matrix has rank at most k
      const auto a = oracle::random_matrix(rng, rows, k, 3);
      const auto b = oracle::random_matrix(rng, k, cols, 3);
      std::vector<std::vector<oracle::Frac>> m(rows, std::vector<oracle::Frac>(cols));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          for (std::size_t j = 0; j < k; ++j) m[r][c] = m[r][c] + a[r][j] * b[j][c];
      const auto lib = oracle::to_library(m);
      CHECK(rank(lib) == oracle::rank(m));
      const auto ker = kernel_basis(lib);
      CHECK(ker.size() == cols - oracle::rank(m));
      for (const auto& v : ker) CHECK((lib * v) == std::vector<Rational>(rows));
      if (rows == cols) {
        const auto d = oracle::det(m);
        CHECK(determinant(lib) == Rational(d.n, d.d));
      }
    }
  }

  TEST_CASE("inverse of a random invertible matrix") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = oracle::to_library(oracle::random_matrix(rng, 4, 4, 5));
      if (is_zero(determinant(m))) continue;
      CHECK(m * inverse(m) == MatrixQ::identity(4));
    }
    CHECK_THROWS_AS(inverse(MatrixQ(3, 3)), ContractViolation);
  }

  TEST_CASE("shape mismatches are contract violations") {
    CHECK_THROWS_AS(MatrixQ(2, 3) * MatrixQ(2, 3), ContractViolation);
    CHECK_THROWS_AS(MatrixQ(2, 3) + MatrixQ(3, 2), ContractViolation);
  }
}
