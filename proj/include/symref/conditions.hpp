#ifndef SYMREF_CONDITIONS_HPP
#define SYMREF_CONDITIONS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symref/chars.hpp"
#include "symref/reflections.hpp"

namespace symref {

/*
 * Linear conditions on the reflection parameter c = (c_R1, ..., c_R5) that a
 * G-character chi must satisfy if it comes from a finite-dimensional module
 * of the t = 0 symplectic reflection algebra:
 *
 *   E0:   sum over reflections s of chi(s) c(s) = 0
 *   E_i:  2 chi(-Id) c_i + sum over s not in {s_i, -s_i} of chi(s_i s) c(s) = 0
 *
 * In class coordinates row E0 has entry 2 chi(s_j) in column j, and row E_i
 * has 2 chi(-Id) on the diagonal and chi(s_i s_j) + chi(-s_i s_j) elsewhere.
 */
inline constexpr std::size_t kConditionRows = 6;
inline constexpr std::size_t kParameterDim = 5;

using IntVector5 = std::array<std::int64_t, kParameterDim>;

struct TraceConditionSystem {
  std::array<IntVector5, kConditionRows> rows{};

  static constexpr std::array<const char*, kConditionRows> kRowLabels = {"E0", "E_R1", "E_R2", "E_R3", "E_R4", "E_R5"};
  bool is_zero() const;
  MatrixQ to_matrix() const;
  friend bool operator==(const TraceConditionSystem&, const TraceConditionSystem&) = default;
};

/// Class indices the condition rows read from, for one choice of
/// representatives s_1..s_5 of the reflection classes.
struct ConditionContext {
  std::size_t minus_identity_class = 0;
  std::array<std::size_t, kParameterDim> reflection_class{};
  std::array<std::size_t, kParameterDim> negated_reflection_class{};
  // [i][j]: classes of s_i s_j and of -(s_i s_j)
  std::array<std::array<std::size_t, kParameterDim>, kParameterDim> product_class{};
  std::array<std::array<std::size_t, kParameterDim>, kParameterDim> negated_product_class{};
};

ConditionContext make_condition_context(const PaperGroup& pg, const ClassData& cd,
                                        const std::array<std::size_t, kParameterDim>& representatives);

TraceConditionSystem build_system(const ClassFunction& chi, const ConditionContext& ctx);

/// Canonical kernel basis of the 6x5 system over the rationals.
std::vector<std::vector<Rational>> solution_space(const TraceConditionSystem& system);

struct Hyperplane {
  enum class Kind { LinearCharacter, Coordinate };

  Kind kind = Kind::Coordinate;
  std::size_t index = 0;  // character row for LinearCharacter, R-label position for Coordinate
  IntVector5 normal{};    // primitive, first nonzero entry positive

  std::string label() const;
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const ReflectionParameter& c) const;
};

/// gcd 1 and first nonzero entry positive. Throws ContractViolation on zero.
IntVector5 canonical_normal(IntVector5 v);

/*
 * The sixteen hyperplanes sum_j chi(s_j) c_j = 0 over the linear characters
 * followed by the five coordinate hyperplanes c_j = 0. Verifies that each
 * linear character has chi(-Id) = 1 and prod_j chi(s_j) = 1, and that all
 * 21 canonical normals are distinct (HyperplaneCollision otherwise).
 */
std::vector<Hyperplane> hyperplane_set(const CharacterTable& table, const ConditionContext& ctx);

/// Indices of the hyperplanes containing the whole kernel. A zero kernel is
/// contained in every hyperplane.
std::vector<std::size_t> containing_hyperplanes(const std::vector<std::vector<Rational>>& kernel,
                                                const std::vector<Hyperplane>& hyperplanes);

struct ClassificationFailure {
  std::uint64_t index = 0;
  MultiplicityVector multiplicities;
  std::size_t kernel_dimension = 0;
};

struct ClassificationReport {
  std::uint64_t candidates = 0;
  std::uint64_t verified = 0;
  std::vector<ClassificationFailure> failures;
  std::vector<std::uint64_t> per_hyperplane;     // aligned with the hyperplane list
  std::array<std::uint64_t, 6> kernel_dimension_histogram{};
};

/// Checks the candidates with index in [begin, end) on the calling thread.
ClassificationReport classify_range(const CharacterTable& table, const ConditionContext& ctx,
                                    const std::vector<Hyperplane>& hyperplanes, std::uint64_t begin,
                                    std::uint64_t end);

/*
 * Runs every proper nonzero subrepresentation character through the
 * conditions and checks that its solution space lies in one of the
 * hyperplanes. The index space is cut into `jobs` contiguous ranges, one
 * thread each; partial reports are merged in range order.
 */
ClassificationReport verify_complemma(const CharacterTable& table, const ConditionContext& ctx,
                                      const std::vector<Hyperplane>& hyperplanes, unsigned jobs);

struct SmoothnessReport {
  enum class Verdict { Smooth, Singular };
  Verdict verdict = Verdict::Smooth;
  std::vector<std::size_t> hyperplanes_hit;
  std::size_t two_dim_leaves = 0;
  static constexpr std::size_t kZeroDimLeafBound = 10;
};

SmoothnessReport smoothness(const ReflectionParameter& c, const std::vector<Hyperplane>& hyperplanes);

/// A reflection with its R-label and degenerate form omega_s.
struct LabelledReflection {
  std::size_t element = 0;
  std::size_t label = 0;
  MatrixGQ omega_s;
};

/// All reflections of the group in index order.
std::vector<LabelledReflection> labelled_reflections(const PaperGroup& pg, const ClassData& cd,
                                                     const ReflectionClassSet& labels);

/*
 * Whether chi extends to a one-dimensional module with V acting by zero:
 * the defining commutator relation then forces
 *   sum over reflections s of c(s) chi(s) omega_s = 0
 * as a bilinear form.
 */
bool one_dim_rep_check(const ClassFunction& chi, const ReflectionParameter& c,
                       const std::vector<LabelledReflection>& reflections, const ClassData& cd);

/// Everything the verification commands share, built once.
struct PaperModel {
  PaperGroup pg;
  CharacterTable table;
  ReflectionClassSet labels;
  ConditionContext ctx;
  std::vector<Hyperplane> hyperplanes;
  std::vector<LabelledReflection> reflections;

  static PaperModel build(std::size_t closure_cap = kDefaultClosureCap);
};

}  // namespace symref

#endif  // SYMREF_CONDITIONS_HPP
