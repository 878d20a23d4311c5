#ifndef SYMREF_POLY_HPP
#define SYMREF_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "symref/matrix.hpp"

namespace symref {

inline constexpr std::size_t kMaxVariables = 4;

/*
 * Exponent vector packed into 64 bits, 16 bits per variable, variable 0 in
 * the most significant field. Integer order on keys is lexicographic order
 * on exponent vectors.
 */
struct Monomial {
  using Exponents = std::array<std::uint16_t, kMaxVariables>;

  static std::uint64_t pack(const Exponents& e) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < kMaxVariables; ++k) key = (key << 16) | e[k];
    return key;
  }
  static Exponents unpack(std::uint64_t key) {
    Exponents e{};
    for (std::size_t k = kMaxVariables; k-- > 0;) {
      e[k] = static_cast<std::uint16_t>(key & 0xffff);
      key >>= 16;
    }
    return e;
  }
  static std::uint16_t exponent(std::uint64_t key, std::size_t var) {
    return static_cast<std::uint16_t>(key >> (16 * (kMaxVariables - 1 - var)));
  }
  static std::uint64_t unit(std::size_t var) { return std::uint64_t{1} << (16 * (kMaxVariables - 1 - var)); }
  static unsigned degree(std::uint64_t key);
};

/// All monomials of total degree d in n variables, in increasing key order.
std::vector<std::uint64_t> monomials_of_degree(std::size_t nvars, unsigned d);

/// Sparse polynomial in up to four variables; terms sorted by key, no zero coefficients.
class Poly {
 public:
  using Term = std::pair<std::uint64_t, GaussianRational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  /// Takes terms in any order, merges duplicates, drops zeros.
  Poly(std::size_t nvars, std::vector<Term> terms);

  static Poly constant(std::size_t nvars, const GaussianRational& c);
  static Poly variable(std::size_t nvars, std::size_t var);
  static Poly monomial(std::size_t nvars, std::uint64_t key, GaussianRational c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of the leading term; the zero polynomial has degree 0.
  unsigned degree() const;
  const Term& leading_term() const { return terms_.back(); }

  Poly derivative(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussianRational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// this += s * o
  void add_scaled(const Poly& o, const GaussianRational& s);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// f(A x): substitutes x_a -> sum_b A(a, b) x_b.
Poly substitute(const MatrixGQ& a, const Poly& f);

/*
 * Constant Poisson bivector. With pi = omega^-1 the bracket is
 *   {f, g} = sum_{a,b} pi(a, b) (d f / d x_a) (d g / d x_b).
 */
class PoissonStructure {
 public:
  explicit PoissonStructure(MatrixGQ bivector);
  static PoissonStructure from_form(const MatrixGQ& omega) { return PoissonStructure(inverse(omega)); }

  const MatrixGQ& bivector() const { return bivector_; }
  Poly bracket(const Poly& f, const Poly& g) const;

 private:
  MatrixGQ bivector_;
  std::vector<std::tuple<std::size_t, std::size_t, GaussianRational>> nonzero_;
};

Poly poisson_bracket(const Poly& f, const Poly& g, const PoissonStructure& pi);

}  // namespace symref

#endif  // SYMREF_POLY_HPP
