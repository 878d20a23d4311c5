#ifndef SYMREF_EXACT_HPP
#define SYMREF_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace symref {

/*
 * Scalars.
 *
 * Rational is GMP's mpq_class, always kept canonical (reduced, positive
 * denominator). GaussianRational is a + b*i with rational a, b; every group
 * element, bilinear form and polynomial coefficient in the library lives in
 * this field.
 */
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// num/den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);

/// Orders by (numerator, denominator) as integers. This is not the numeric
/// order; it exists to give group elements and reports a stable labelling.
std::strong_ordering canonical_compare(const Rational& a, const Rational& b);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);

/// Accepts an optionally signed integer or "p/q" with q > 0. No decimals.
Rational parse_rational(std::string_view text);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const;
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

/// Lexicographic on (re.num, re.den, im.num, im.den).
std::strong_ordering canonical_compare(const GaussianRational& a, const GaussianRational& b);

/// "a+b*i" with zero parts elided; "0" for zero. Examples: "1", "-1*i", "1/2-3*i".
std::string to_string(const GaussianRational& z);

}  // namespace symref

#endif  // SYMREF_EXACT_HPP
