#include "symref/exact.hpp"

#include <regex>

#include "symref/errors.hpp"

namespace symref {

namespace {

std::strong_ordering compare_integers(const Integer& a, const Integer& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering canonical_compare(const Rational& a, const Rational& b) {
  if (auto c = compare_integers(a.get_num(), b.get_num()); c != 0) return c;
  return compare_integers(a.get_den(), b.get_den());
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational ratio(long num, long den) {
  if (den == 0) throw ContractViolation("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  std::string num = m[1].str();
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(1);
  if (m[2].matched) {
    d = Integer(m[2].str(), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational GaussianRational::norm() const { return Rational(re_ * re_ + im_ * im_); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ContractViolation("inverse of zero");
  if (is_real()) return GaussianRational(Rational(1 / re_));
  const Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ContractViolation("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering canonical_compare(const GaussianRational& a, const GaussianRational& b) {
  if (auto c = canonical_compare(a.re(), b.re()); c != 0) return c;
  return canonical_compare(a.im(), b.im());
}

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  if (z.is_real()) return to_string(z.re());
  std::string out;
  if (sgn(z.re()) != 0) {
    out = to_string(z.re());
    if (sgn(z.im()) > 0) out += "+";
  }
  out += to_string(z.im()) + "*i";
  return out;
}

}  // namespace symref
