#ifndef SYMREF_REFLECTIONS_HPP
#define SYMREF_REFLECTIONS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symref/chars.hpp"
#include "symref/group.hpp"

namespace symref {

using VectorGQ = std::vector<GaussianRational>;

/// Elements g with rank(g - Id) = 2, in index order.
std::vector<std::size_t> find_reflections(const FiniteMatrixGroup& g);

/// Compares the reflection set against {g : g^2 = Id, g not central}.
bool reflections_equal_noncentral_involutions(const FiniteMatrixGroup& g);

struct SymplecticReflection {
  std::size_t element = 0;
  std::vector<VectorGQ> fixed_space;  // V^s
  std::vector<VectorGQ> perp_space;   // (V^s)^perp with respect to the form
  MatrixGQ omega_s;
};

/*
 * Degenerate form omega_s(v, w) = omega(pi v, pi w), where pi is the
 * projection onto (V^s)^perp along V^s. Returned as the Gram matrix
 * pi^T omega pi. Throws NotAReflection when rank(s - Id) != 2 or the fixed
 * plane is degenerate for omega.
 */
SymplecticReflection analyze_reflection(const MatrixGQ& s, const MatrixGQ& omega);
MatrixGQ omega_s(const MatrixGQ& s, const MatrixGQ& omega);

/// Canonical labels R1..R5 for the reflection classes of the order-32 group.
struct ReflectionClassSet {
  std::array<std::size_t, 5> class_index{};
  std::array<std::size_t, 5> representative{};
};

/// Throws TableInconsistent if the listed representatives do not give 5
/// distinct reflection classes of size 2 covering every reflection.
ReflectionClassSet label_reflection_classes(const PaperGroup& pg, const ClassData& cd);

/// A class function supported on the reflections, in R1..R5 coordinates.
struct ReflectionParameter {
  std::array<Rational, 5> c;

  const Rational& operator[](std::size_t k) const { return c[k]; }
  Rational& operator[](std::size_t k) { return c[k]; }
};

/// {"R1": "1", "R2": "-2/3", ...}; all five keys required, no others allowed,
/// values must be rational strings.
ReflectionParameter parse_parameter_json(std::string_view text);
std::string parameter_to_json(const ReflectionParameter& c);

}  // namespace symref

#endif  // SYMREF_REFLECTIONS_HPP
