#ifndef SYMREF_GROUP_HPP
#define SYMREF_GROUP_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symref/matrix.hpp"

namespace symref {

/*
 * A finite group of invertible matrices, stored as a canonically ordered
 * element list together with full multiplication and inverse tables.
 * Elements are referred to by their index in the canonical order.
 */
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;

  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return elements_.empty() ? 0 : elements_.front().rows(); }
  std::size_t identity() const { return identity_; }

  const MatrixGQ& matrix(std::size_t g) const { return elements_[g]; }
  const std::vector<MatrixGQ>& matrices() const { return elements_; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return mul_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  /// h g h^-1
  std::size_t conjugate(std::size_t g, std::size_t h) const { return multiply(multiply(h, g), inverse(h)); }
  std::size_t commutator(std::size_t g, std::size_t h) const {
    return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
  }
  std::size_t element_order(std::size_t g) const;

  /// Index of the element equal to m, if any.
  std::optional<std::size_t> find(const MatrixGQ& m) const;
  std::size_t index_of(const MatrixGQ& m) const;

  /// Smallest subgroup containing the given elements, as a sorted index set.
  std::vector<std::size_t> generated_subgroup(std::span<const std::size_t> gens) const;

 private:
  friend FiniteMatrixGroup close_group(std::span<const MatrixGQ>, std::size_t);

  std::vector<MatrixGQ> elements_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure of the generators under multiplication.
FiniteMatrixGroup close_group(std::span<const MatrixGQ> generators, std::size_t cap = kDefaultClosureCap);

struct ConjugacyClass {
  std::vector<std::size_t> members;  // sorted
  std::size_t representative = 0;    // smallest member
  std::size_t size() const { return members.size(); }
};

/// Classes ordered by representative index.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& g);

/// element index -> position of its class in `classes`
std::vector<std::size_t> class_lookup(const FiniteMatrixGroup& g, const std::vector<ConjugacyClass>& classes);

/// True iff g^T form g = form for every element.
bool preserves_form(const FiniteMatrixGroup& g, const MatrixGQ& form);

struct GroupStructure {
  std::vector<std::size_t> center;
  std::vector<std::size_t> commutator_subgroup;
  std::size_t abelianization_order = 0;
};

GroupStructure structure(const FiniteMatrixGroup& g);

namespace matrices {

MatrixGQ id2();
MatrixGQ quaternion_i();
MatrixGQ quaternion_j();
MatrixGQ quaternion_k();
/// Rotation generator of the dihedral group of order 8.
MatrixGQ dihedral_rho();
/// Reflection generator of the dihedral group of order 8.
MatrixGQ dihedral_sigma();
/// [[0,1],[-1,0]]
MatrixGQ omega2();

}  // namespace matrices

/*
 * The order-32 group Q8 x_{Z/2} D8 acting on C^2 (x) C^2, with the invariant
 * symplectic form omega2 (x) Id2 and the five canonical symplectic reflection
 * representatives
 *   R1 = I(x)rho, R2 = J(x)rho, R3 = K(x)rho, R4 = Id(x)sigma, R5 = Id(x)sigma*rho.
 */
struct PaperGroup {
  FiniteMatrixGroup group;
  MatrixGQ omega;
  std::array<std::size_t, 5> reflection_representatives{};
  std::size_t minus_identity = 0;
};

inline constexpr std::array<const char*, 5> kReflectionLabels = {"R1", "R2", "R3", "R4", "R5"};
inline constexpr std::array<const char*, 5> kReflectionNames = {"I(x)rho", "J(x)rho", "K(x)rho", "Id(x)sigma",
                                                                "Id(x)sigma*rho"};

PaperGroup build_paper_group(std::size_t closure_cap = kDefaultClosureCap);

}  // namespace symref

#endif  // SYMREF_GROUP_HPP
