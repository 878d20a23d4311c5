#ifndef SYMREF_HP0_HPP
#define SYMREF_HP0_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "symref/group.hpp"
#include "symref/poly.hpp"

namespace symref {

/*
 * Degree-truncated zeroth Poisson homology of an invariant ring,
 * HP0(C[V]^G) = C[V]^G / {C[V]^G, C[V]^G}, for a finite G preserving a
 * symplectic form omega. The bracket uses the constant bivector omega^-1.
 */

/// Graded dimensions of C[V]^G up to degree max_d, read off the Molien
/// series (1/|G|) sum_g 1/det(Id - t g). Throws NonIntegerMolien.
std::vector<std::uint64_t> molien_dims(const FiniteMatrixGroup& g, unsigned max_d);

/// (1/|G|) sum_g f(g x)
Poly reynolds(const FiniteMatrixGroup& g, const Poly& f);

bool is_invariant(const FiniteMatrixGroup& g, const Poly& f);

/// Incremental sparse row echelon form over the Gaussian rationals, keyed by
/// leading (largest) monomial.
class SparseEchelon {
 public:
  /// Reduces v against the stored rows; keeps it if a nonzero remainder is left.
  bool insert(Poly v);
  std::size_t rank() const { return pivots_.size(); }
  /// Fully reduced basis with leading coefficients 1, in increasing order of leading monomial.
  std::vector<Poly> reduced_basis() const;

 private:
  std::map<std::uint64_t, Poly> pivots_;
};

/*
 * Basis of the degree-d invariants: Reynolds images of all degree-d
 * monomials, fully row reduced. Throws MolienMismatch if the count differs
 * from the Molien coefficient.
 */
std::vector<Poly> invariant_basis(const FiniteMatrixGroup& g, unsigned d, unsigned jobs = 1);

struct DegreeDims {
  unsigned degree = 0;
  std::size_t invariant_dim = 0;
  std::size_t bracket_span_dim = 0;
  std::size_t hp0_dim = 0;
  std::size_t brackets_evaluated = 0;
};

struct GradedDims {
  std::vector<DegreeDims> per_degree;
  std::size_t cumulative_hp0 = 0;
  unsigned cutoff = 0;
  /// hp0_dim vanished on the last four degrees up to the cutoff.
  bool stabilized = false;
  /// A sample of brackets in every degree was checked to be invariant.
  bool sampled_brackets_invariant = true;
};

inline constexpr unsigned kDefaultHp0Cutoff = 24;
inline constexpr unsigned kStabilizationWindow = 4;

/*
 * For each degree d <= max_d: rank of the span of {f, h} over pairs of
 * invariant basis elements with deg f + deg h = d + 2, both of positive
 * degree. Pairs are visited in a fixed order and the search stops once the
 * span fills the degree-d invariants, so the result does not depend on
 * `jobs`.
 */
GradedDims hp0_graded_dims(const FiniteMatrixGroup& g, const MatrixGQ& omega, unsigned max_d, unsigned jobs = 1);

/// Number of conjugacy classes whose elements g have g - Id invertible.
/// Checks every class member, not only the representative.
std::size_t invertible_class_count(const FiniteMatrixGroup& g, const std::vector<ConjugacyClass>& classes);

}  // namespace symref

#endif  // SYMREF_HP0_HPP
