#include "symref/chars.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace symref {

ClassData ClassData::of(const FiniteMatrixGroup& g) {
  ClassData cd;
  cd.classes = conjugacy_classes(g);
  cd.class_of = class_lookup(g, cd.classes);
  return cd;
}

std::vector<ClassFunction> linear_characters(const FiniteMatrixGroup& g, const ClassData& cd) {
  const auto derived = structure(g).commutator_subgroup;
  std::vector<bool> in_derived(g.order(), false);
  for (auto x : derived) in_derived[x] = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!in_derived[g.multiply(x, x)]) {
      throw UnsupportedAbelianization("abelianization has an element of order > 2");
    }
  }

  // coset label = smallest element of x[G,G]
  std::vector<std::size_t> coset(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t best = g.order();
    for (auto n : derived) best = std::min(best, g.multiply(x, n));
    coset[x] = best;
  }

  // Coordinates of each coset over F2 with respect to a greedily chosen basis.
  std::map<std::size_t, std::uint32_t> coordinates{{coset[g.identity()], 0}};
  unsigned rank = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coordinates.contains(coset[x])) continue;
    if (rank >= 31) throw UnsupportedAbelianization("abelianization too large");
    const std::uint32_t bit = 1u << rank++;
    std::vector<std::pair<std::size_t, std::uint32_t>> added;
    for (const auto& [c, bits] : coordinates) added.emplace_back(coset[g.multiply(c, x)], bits | bit);
    for (auto& [c, bits] : added) coordinates.emplace(c, bits);
  }
  if (coordinates.size() != g.order() / derived.size()) {
    throw UnsupportedAbelianization("quotient is not an elementary abelian 2-group");
  }

  std::vector<ClassFunction> chars;
  for (std::uint32_t eps = 0; eps < (1u << rank); ++eps) {
    ClassFunction chi;
    chi.values.reserve(cd.count());
    for (const auto& cls : cd.classes) {
      const auto bits = coordinates.at(coset[cls.representative]);
      chi.values.push_back(std::popcount(eps & bits) % 2 == 0 ? 1 : -1);
    }
    chars.push_back(std::move(chi));
  }
  return chars;
}

ClassFunction defining_character(const FiniteMatrixGroup& g, const ClassData& cd) {
  ClassFunction chi;
  for (const auto& cls : cd.classes) {
    const auto& m = g.matrix(cls.representative);
    GaussianRational trace;
    for (std::size_t k = 0; k < m.rows(); ++k) trace += m(k, k);
    if (!trace.is_real() || trace.re().get_den() != 1 || !trace.re().get_num().fits_slong_p()) {
      throw NonIntegerTrace("trace " + to_string(trace) + " is not an integer");
    }
    chi.values.push_back(trace.re().get_num().get_si());
  }
  return chi;
}

std::int64_t weighted_pairing(const ClassFunction& a, const ClassFunction& b, const ClassData& cd) {
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < cd.count(); ++c)
    sum += static_cast<std::int64_t>(cd.classes[c].size()) * a[c] * b[c];
  return sum;
}

CharacterTable character_table(const FiniteMatrixGroup& g) {
  CharacterTable t;
  t.group_order = g.order();
  t.class_data = ClassData::of(g);
  const auto& cd = t.class_data;
  t.identity_class = cd.class_of[g.identity()];

  t.rows = linear_characters(g, cd);
  t.linear_count = t.rows.size();
  t.rows.push_back(defining_character(g, cd));
  for (const auto& row : t.rows) t.dims.push_back(row[t.identity_class]);

  const auto order = static_cast<std::int64_t>(g.order());
  if (t.rows.size() != cd.count()) {
    throw TableInconsistent("row count " + std::to_string(t.rows.size()) + " != class count " +
                            std::to_string(cd.count()));
  }
  std::int64_t dim_square_sum = 0;
  for (auto d : t.dims) dim_square_sum += d * d;
  if (dim_square_sum != order) throw TableInconsistent("sum of squared dimensions != |G|");
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
      if (weighted_pairing(t.rows[i], t.rows[j], cd) != (i == j ? order : 0))
        throw TableInconsistent("row orthogonality fails for rows " + std::to_string(i) + "," + std::to_string(j));
    }
  for (std::size_t a = 0; a < cd.count(); ++a)
    for (std::size_t b = 0; b < cd.count(); ++b) {
      std::int64_t sum = 0;
      for (const auto& row : t.rows) sum += row[a] * row[b];
      if (sum != (a == b ? cd.centralizer_order(a, g.order()) : 0))
        throw TableInconsistent("column orthogonality fails for classes " + std::to_string(a) + "," +
                                std::to_string(b));
    }
  return t;
}

SubrepEnumerator::SubrepEnumerator(const CharacterTable& table) : table_(&table) {
  for (auto d : table.dims) total_ *= static_cast<std::uint64_t>(d + 1);
}

MultiplicityVector SubrepEnumerator::at(std::uint64_t index) const {
  if (index >= count()) throw ContractViolation("subrepresentation index out of range");
  std::uint64_t t = index + 1;  // skip the zero vector
  const auto n = table_->dims.size();
  MultiplicityVector mv{std::vector<std::uint8_t>(n)};
  for (std::size_t k = n; k-- > 0;) {
    const auto radix = static_cast<std::uint64_t>(table_->dims[k] + 1);
    mv.m[k] = static_cast<std::uint8_t>(t % radix);
    t /= radix;
  }
  return mv;
}

void SubrepEnumerator::increment(MultiplicityVector& mv) const {
  for (std::size_t k = mv.m.size(); k-- > 0;) {
    if (mv.m[k] < table_->dims[k]) {
      ++mv.m[k];
      return;
    }
    mv.m[k] = 0;
  }
}

ClassFunction SubrepEnumerator::character(const MultiplicityVector& mv) const {
  ClassFunction chi{std::vector<std::int64_t>(table_->class_data.count(), 0)};
  for (std::size_t i = 0; i < mv.m.size(); ++i) {
    if (mv.m[i] == 0) continue;
    for (std::size_t c = 0; c < chi.size(); ++c) chi.values[c] += mv.m[i] * table_->rows[i][c];
  }
  return chi;
}

}  // namespace symref
