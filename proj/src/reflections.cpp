#include "symref/reflections.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace symref {

std::vector<std::size_t> find_reflections(const FiniteMatrixGroup& g) {
  const auto id = MatrixGQ::identity(g.dimension());
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (rank(g.matrix(x) - id) == 2) out.push_back(x);
  return out;
}

bool reflections_equal_noncentral_involutions(const FiniteMatrixGroup& g) {
  const auto center = structure(g).center;
  std::vector<std::size_t> involutions;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const bool central = std::binary_search(center.begin(), center.end(), x);
    if (!central && g.multiply(x, x) == g.identity()) involutions.push_back(x);
  }
  return involutions == find_reflections(g);
}

SymplecticReflection analyze_reflection(const MatrixGQ& s, const MatrixGQ& omega) {
  const std::size_t n = s.rows();
  if (!s.is_square() || !omega.is_square() || omega.rows() != n)
    throw ContractViolation("reflection and form dimensions differ");
  SymplecticReflection r;
  r.fixed_space = kernel_basis(s - MatrixGQ::identity(n));
  if (r.fixed_space.size() + 2 != n) throw NotAReflection("rank(s - Id) != 2 for " + to_string(s));

  // w is in the perp iff v^T omega w = 0 for every fixed v.
  MatrixGQ pairing(r.fixed_space.size(), n);
  for (std::size_t k = 0; k < r.fixed_space.size(); ++k)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t a = 0; a < n; ++a) pairing(k, c) += r.fixed_space[k][a] * omega(a, c);
  r.perp_space = kernel_basis(pairing);

  MatrixGQ basis(n, n);
  std::size_t col = 0;
  for (const auto* space : {&r.fixed_space, &r.perp_space})
    for (const auto& v : *space) {
      if (col >= n) throw NotAReflection("fixed space is degenerate for the form");
      for (std::size_t a = 0; a < n; ++a) basis(a, col) = v[a];
      ++col;
    }
  if (col != n || rank(basis) != n) throw NotAReflection("fixed space is degenerate for the form");

  MatrixGQ keep_perp(n, n);
  for (std::size_t k = r.fixed_space.size(); k < n; ++k) keep_perp(k, k) = 1;
  const MatrixGQ projection = basis * keep_perp * inverse(basis);
  r.omega_s = projection.transpose() * omega * projection;
  return r;
}

MatrixGQ omega_s(const MatrixGQ& s, const MatrixGQ& omega) { return analyze_reflection(s, omega).omega_s; }

ReflectionClassSet label_reflection_classes(const PaperGroup& pg, const ClassData& cd) {
  ReflectionClassSet set;
  std::set<std::size_t> distinct;
  for (std::size_t k = 0; k < 5; ++k) {
    set.representative[k] = pg.reflection_representatives[k];
    set.class_index[k] = cd.class_of[set.representative[k]];
    if (cd.classes[set.class_index[k]].size() != 2)
      throw TableInconsistent(std::string("reflection class ") + kReflectionLabels[k] + " does not have size 2");
    distinct.insert(set.class_index[k]);
  }
  if (distinct.size() != 5) throw TableInconsistent("reflection representatives share a class");
  std::set<std::size_t> reflection_classes;
  for (auto x : find_reflections(pg.group)) reflection_classes.insert(cd.class_of[x]);
  if (reflection_classes != distinct)
    throw TableInconsistent("labelled classes do not cover every symplectic reflection");
  return set;
}

ReflectionParameter parse_parameter_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("parameter file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find_if(kReflectionLabels.begin(), kReflectionLabels.end(),
                     [&](const char* l) { return key == l; }) == kReflectionLabels.end())
      throw ParseError("unexpected parameter key '" + key + "'");
  }
  ReflectionParameter c;
  for (std::size_t k = 0; k < 5; ++k) {
    const auto it = doc.find(kReflectionLabels[k]);
    if (it == doc.end()) throw ParseError(std::string("missing parameter key '") + kReflectionLabels[k] + "'");
    if (!it->is_string())
      throw ParseError(std::string("parameter ") + kReflectionLabels[k] + " must be a rational string like \"-2/3\"");
    c[k] = parse_rational(it->get<std::string>());
  }
  return c;
}

std::string parameter_to_json(const ReflectionParameter& c) {
  nlohmann::ordered_json doc;
  for (std::size_t k = 0; k < 5; ++k) doc[kReflectionLabels[k]] = to_string(c[k]);
  return doc.dump();
}

}  // namespace symref
