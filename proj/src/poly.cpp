#include "symref/poly.hpp"

#include <algorithm>

namespace symref {

namespace {

void normalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t j = k + 1;
    GaussianRational sum = std::move(terms[k].second);
    while (j < terms.size() && terms[j].first == terms[k].first) sum += terms[j++].second;
    if (!sum.is_zero()) {
      terms[out].first = terms[k].first;
      terms[out].second = std::move(sum);
      ++out;
    }
    k = j;
  }
  terms.resize(out);
}

GaussianRational power(const GaussianRational& base, unsigned e) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace

unsigned Monomial::degree(std::uint64_t key) {
  unsigned d = 0;
  for (std::size_t k = 0; k < kMaxVariables; ++k) {
    d += key & 0xffff;
    key >>= 16;
  }
  return d;
}

std::vector<std::uint64_t> monomials_of_degree(std::size_t nvars, unsigned d) {
  if (nvars == 0 || nvars > kMaxVariables) throw ContractViolation("unsupported number of variables");
  std::vector<std::uint64_t> out;
  Monomial::Exponents e{};
  // Recursive fill of the first nvars exponents summing to d.
  auto fill = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      e[var] = static_cast<std::uint16_t>(remaining);
      out.push_back(Monomial::pack(e));
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, remaining - k);
    }
  };
  fill(fill, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Poly::Poly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  normalize(terms_);
}

Poly Poly::constant(std::size_t nvars, const GaussianRational& c) { return monomial(nvars, 0, c); }

Poly Poly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw ContractViolation("variable index out of range");
  return monomial(nvars, Monomial::unit(var));
}

Poly Poly::monomial(std::size_t nvars, std::uint64_t key, GaussianRational c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(key, std::move(c));
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = Monomial::degree(terms_.front().first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return Monomial::degree(t.first) == d; });
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : Monomial::degree(terms_.back().first); }

Poly Poly::derivative(std::size_t var) const {
  Poly d(nvars_);
  const auto unit = Monomial::unit(var);
  for (const auto& [key, c] : terms_) {
    const auto e = Monomial::exponent(key, var);
    if (e == 0) continue;
    d.terms_.emplace_back(key - unit, c * GaussianRational(static_cast<long>(e)));
  }
  return d;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

void Poly::add_scaled(const Poly& o, const GaussianRational& s) {
  if (s.is_zero() || o.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.emplace_back(o.terms_[j].first, o.terms_[j].second * s);
      ++j;
    } else {
      GaussianRational sum = std::move(terms_[i].second);
      sum += o.terms_[j].second * s;
      if (!sum.is_zero()) merged.emplace_back(terms_[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, -1);
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) terms.emplace_back(ka + kb, ca * cb);
  return Poly(std::max(a.nvars_, b.nvars_), std::move(terms));
}

Poly substitute(const MatrixGQ& a, const Poly& f) {
  const std::size_t n = f.nvars();
  if (a.rows() != n || a.cols() != n) throw ContractViolation("substitution matrix does not match variable count");

  // Monomial matrices (one nonzero per row) send monomials to monomials.
  std::vector<std::size_t> target(n);
  bool monomial_matrix = true;
  for (std::size_t r = 0; r < n && monomial_matrix; ++r) {
    std::size_t nonzero = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_zero(a(r, c))) {
        target[r] = c;
        ++nonzero;
      }
    monomial_matrix = nonzero == 1;
  }

  if (monomial_matrix) {
    std::vector<Poly::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& [key, c] : f.terms()) {
      std::uint64_t image = 0;
      GaussianRational coeff = c;
      for (std::size_t r = 0; r < n; ++r) {
        const auto e = Monomial::exponent(key, r);
        if (e == 0) continue;
        image += Monomial::unit(target[r]) * e;
        coeff *= power(a(r, target[r]), e);
      }
      terms.emplace_back(image, std::move(coeff));
    }
    return Poly(n, std::move(terms));
  }

  std::vector<Poly> linear(n, Poly(n));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Poly::Term> terms;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_zero(a(r, c))) terms.emplace_back(Monomial::unit(c), a(r, c));
    linear[r] = Poly(n, std::move(terms));
  }
  std::vector<std::vector<Poly>> powers(n, std::vector<Poly>{Poly::constant(n, 1)});
  Poly result(n);
  for (const auto& [key, c] : f.terms()) {
    Poly term = Poly::constant(n, c);
    for (std::size_t r = 0; r < n; ++r) {
      const auto e = Monomial::exponent(key, r);
      while (powers[r].size() <= e) powers[r].push_back(powers[r].back() * linear[r]);
      if (e > 0) term = term * powers[r][e];
    }
    result += term;
  }
  return result;
}

PoissonStructure::PoissonStructure(MatrixGQ bivector) : bivector_(std::move(bivector)) {
  if (!bivector_.is_square()) throw ContractViolation("Poisson bivector must be square");
  if (!(bivector_.transpose() == -bivector_)) throw ContractViolation("Poisson bivector must be antisymmetric");
  for (std::size_t a = 0; a < bivector_.rows(); ++a)
    for (std::size_t b = 0; b < bivector_.cols(); ++b)
      if (!is_zero(bivector_(a, b))) nonzero_.emplace_back(a, b, bivector_(a, b));
}

Poly PoissonStructure::bracket(const Poly& f, const Poly& g) const {
  const std::size_t n = bivector_.rows();
  if (f.nvars() != n || g.nvars() != n) throw ContractViolation("bracket: variable count mismatch");
  std::vector<Poly::Term> terms;
  for (const auto& [a, b, pi] : nonzero_) {
    const auto unit_a = Monomial::unit(a);
    const auto unit_b = Monomial::unit(b);
    for (const auto& [kf, cf] : f.terms()) {
      const auto ea = Monomial::exponent(kf, a);
      if (ea == 0) continue;
      const GaussianRational left = cf * pi * GaussianRational(static_cast<long>(ea));
      for (const auto& [kg, cg] : g.terms()) {
        const auto eb = Monomial::exponent(kg, b);
        if (eb == 0) continue;
        terms.emplace_back(kf - unit_a + kg - unit_b, left * cg * GaussianRational(static_cast<long>(eb)));
      }
    }
  }
  return Poly(n, std::move(terms));
}

Poly poisson_bracket(const Poly& f, const Poly& g, const PoissonStructure& pi) { return pi.bracket(f, g); }

}  // namespace symref
