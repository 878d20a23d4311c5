#include "symref/hp0.hpp"

#include <algorithm>
#include <thread>

namespace symref {

namespace {

/// Sum of the k x k principal minors of m, k = 0..n.
std::vector<GaussianRational> principal_minor_sums(const MatrixGQ& m) {
  const std::size_t n = m.rows();
  std::vector<GaussianRational> sums(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    MatrixGQ sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = m(idx[r], idx[c]);
    sums[idx.size()] += determinant(sub);
  }
  return sums;
}

/// Runs fn(k) for k in [0, count) over `jobs` threads, contiguous blocks.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = count * w / jobs;
    const std::size_t end = count * (w + 1) / jobs;
    workers.emplace_back([&fn, begin, end] {
      for (std::size_t k = begin; k < end; ++k) fn(k);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::vector<std::uint64_t> molien_dims(const FiniteMatrixGroup& g, unsigned max_d) {
  std::vector<GaussianRational> total(max_d + 1);
  for (const auto& m : g.matrices()) {
    // det(Id - t m) = sum_k (-1)^k e_k t^k
    const auto e = principal_minor_sums(m);
    std::vector<GaussianRational> p(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) p[k] = k % 2 == 0 ? e[k] : -e[k];
    std::vector<GaussianRational> inv(max_d + 1);
    inv[0] = 1;
    for (unsigned n = 1; n <= max_d; ++n) {
      GaussianRational acc;
      for (std::size_t k = 1; k < p.size() && k <= n; ++k)
        if (!p[k].is_zero() && !inv[n - k].is_zero()) acc -= p[k] * inv[n - k];
      inv[n] = std::move(acc);
    }
    for (unsigned n = 0; n <= max_d; ++n) total[n] += inv[n];
  }
  std::vector<std::uint64_t> dims;
  const GaussianRational order(static_cast<long>(g.order()));
  for (unsigned n = 0; n <= max_d; ++n) {
    const GaussianRational coeff = total[n] / order;
    if (!coeff.is_real() || coeff.re().get_den() != 1 || sgn(coeff.re()) < 0 ||
        !coeff.re().get_num().fits_ulong_p()) {
      throw NonIntegerMolien("Molien coefficient of degree " + std::to_string(n) + " is " + to_string(coeff));
    }
    dims.push_back(coeff.re().get_num().get_ui());
  }
  return dims;
}

Poly reynolds(const FiniteMatrixGroup& g, const Poly& f) {
  Poly sum(f.nvars());
  for (const auto& m : g.matrices()) sum += substitute(m, f);
  return sum * GaussianRational(Rational(1, static_cast<unsigned long>(g.order())));
}

bool is_invariant(const FiniteMatrixGroup& g, const Poly& f) {
  return std::all_of(g.matrices().begin(), g.matrices().end(), [&](const MatrixGQ& m) { return substitute(m, f) == f; });
}

bool SparseEchelon::insert(Poly v) {
  while (!v.is_zero()) {
    const auto lead = v.leading_term().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      v *= v.leading_term().second.inverse();
      pivots_.emplace(lead, std::move(v));
      return true;
    }
    const GaussianRational factor = -v.leading_term().second;
    v.add_scaled(it->second, factor);
  }
  return false;
}

std::vector<Poly> SparseEchelon::reduced_basis() const {
  std::map<std::uint64_t, Poly> reduced;
  for (const auto& [lead, row] : pivots_) {
    Poly r = row;
    std::uint64_t bound = lead;
    while (true) {
      // largest non-leading term that is the lead of an already reduced row
      const auto& terms = r.terms();
      auto it = std::lower_bound(terms.begin(), terms.end(), bound,
                                 [](const Poly::Term& t, std::uint64_t key) { return t.first < key; });
      bool found = false;
      while (it != terms.begin()) {
        --it;
        if (auto p = reduced.find(it->first); p != reduced.end()) {
          const GaussianRational factor = -it->second;
          bound = it->first;
          r.add_scaled(p->second, factor);
          found = true;
          break;
        }
      }
      if (!found) break;
    }
    reduced.emplace(lead, std::move(r));
  }
  std::vector<Poly> out;
  for (auto& [lead, row] : reduced) out.push_back(std::move(row));
  return out;
}

std::vector<Poly> invariant_basis(const FiniteMatrixGroup& g, unsigned d, unsigned jobs) {
  const std::size_t n = g.dimension();
  const auto monomials = monomials_of_degree(n, d);
  std::vector<Poly> images(monomials.size());
  parallel_for(monomials.size(), jobs,
               [&](std::size_t k) { images[k] = reynolds(g, Poly::monomial(n, monomials[k])); });
  SparseEchelon echelon;
  for (auto& p : images) echelon.insert(std::move(p));
  auto basis = echelon.reduced_basis();
  const auto expected = molien_dims(g, d)[d];
  if (basis.size() != expected) {
    throw MolienMismatch("degree " + std::to_string(d) + ": Reynolds basis has " + std::to_string(basis.size()) +
                         " elements, Molien series predicts " + std::to_string(expected));
  }
  return basis;
}

GradedDims hp0_graded_dims(const FiniteMatrixGroup& g, const MatrixGQ& omega, unsigned max_d, unsigned jobs) {
  if (max_d < 2) throw ContractViolation("hp0 cutoff must be at least 2");
  const PoissonStructure pi = PoissonStructure::from_form(omega);
  const auto molien = molien_dims(g, max_d + 1);

  std::map<unsigned, std::vector<Poly>> bases;
  auto basis = [&](unsigned d) -> const std::vector<Poly>& {
    auto it = bases.find(d);
    if (it == bases.end()) it = bases.emplace(d, invariant_basis(g, d, jobs)).first;
    return it->second;
  };

  GradedDims out;
  out.cutoff = max_d;
  for (unsigned d = 0; d <= max_d; ++d) {
    DegreeDims dd;
    dd.degree = d;
    dd.invariant_dim = basis(d).size();

    // pairs (f, h) with deg f <= deg h; same-degree pairs only with f before h
    std::vector<std::pair<const Poly*, const Poly*>> pairs;
    for (unsigned a = 1; 2 * a <= d + 2; ++a) {
      const unsigned b = d + 2 - a;
      if (molien[a] == 0 || molien[b] == 0) continue;
      const auto& fa = basis(a);
      const auto& fb = basis(b);
      for (std::size_t i = 0; i < fa.size(); ++i)
        for (std::size_t j = a == b ? i + 1 : 0; j < fb.size(); ++j) pairs.emplace_back(&fa[i], &fb[j]);
    }

    SparseEchelon span;
    const std::size_t batch = 32 * std::max(1u, jobs);
    for (std::size_t start = 0; start < pairs.size() && span.rank() < dd.invariant_dim; start += batch) {
      const std::size_t count = std::min(batch, pairs.size() - start);
      std::vector<Poly> brackets(count);
      parallel_for(count, jobs, [&](std::size_t k) {
        brackets[k] = pi.bracket(*pairs[start + k].first, *pairs[start + k].second);
      });
      if (start == 0) {
        for (std::size_t k = 0; k < std::min<std::size_t>(count, 2); ++k)
          out.sampled_brackets_invariant = out.sampled_brackets_invariant && is_invariant(g, brackets[k]);
      }
      for (auto& p : brackets) {
        ++dd.brackets_evaluated;
        span.insert(std::move(p));
        if (span.rank() == dd.invariant_dim) break;
      }
    }
    dd.bracket_span_dim = span.rank();
    dd.hp0_dim = dd.invariant_dim - dd.bracket_span_dim;
    out.cumulative_hp0 += dd.hp0_dim;
    out.per_degree.push_back(dd);
  }
  out.stabilized = out.per_degree.size() >= kStabilizationWindow &&
                   std::all_of(out.per_degree.end() - kStabilizationWindow, out.per_degree.end(),
                               [](const DegreeDims& dd) { return dd.hp0_dim == 0; });
  return out;
}

std::size_t invertible_class_count(const FiniteMatrixGroup& g, const std::vector<ConjugacyClass>& classes) {
  const auto id = MatrixGQ::identity(g.dimension());
  std::size_t count = 0;
  for (const auto& cls : classes) {
    const bool invertible = !is_zero(determinant(g.matrix(cls.representative) - id));
    for (auto m : cls.members) {
      if (!is_zero(determinant(g.matrix(m) - id)) != invertible)
        throw ContractViolation("invertibility of g - Id is not constant on a conjugacy class");
    }
    if (invertible) ++count;
  }
  return count;
}

}  // namespace symref
