#ifndef SYMREF_AUTOS_HPP
#define SYMREF_AUTOS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symref/chars.hpp"
#include "symref/reflections.hpp"

namespace symref {

/// An automorphism as a permutation of element indices.
struct GroupAutomorphism {
  std::vector<std::size_t> perm;

  std::size_t operator()(std::size_t x) const { return perm[x]; }
  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
  friend auto operator<=>(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// alpha after beta
GroupAutomorphism compose(const GroupAutomorphism& alpha, const GroupAutomorphism& beta);
GroupAutomorphism invert(const GroupAutomorphism& alpha);

/// x -> h x h^-1
GroupAutomorphism conjugation(const FiniteMatrixGroup& g, std::size_t h);

/// Checks perm(xy) = perm(x) perm(y) on every pair and bijectivity.
bool is_automorphism(const FiniteMatrixGroup& g, const GroupAutomorphism& alpha);

/// Walks the elements in index order and keeps each one that is not yet in
/// the subgroup generated by those kept so far, then drops redundant ones.
std::vector<std::size_t> greedy_generating_tuple(const FiniteMatrixGroup& g);

inline constexpr std::uint64_t kDefaultAutSearchCap = 10'000'000;

/*
 * All automorphisms, found by trying every tuple of images for a greedy
 * generating tuple. Images are restricted to elements of the same order and
 * conjugacy class size; each tuple is extended along a spanning tree of the
 * Cayley graph and kept if it is consistent on every edge and bijective.
 * Throws SearchSpaceExceeded when |G|^k exceeds `cap`. Sorted by permutation.
 */
std::vector<GroupAutomorphism> automorphism_group(const FiniteMatrixGroup& g, std::uint64_t cap = kDefaultAutSearchCap,
                                                  unsigned jobs = 1);

using Permutation5 = std::array<std::uint8_t, 5>;

/// "(R1 R2)(R3 R4 R5)"; "()" for the identity.
std::string cycle_notation(const Permutation5& p);

struct AutReport {
  std::size_t aut_order = 0;
  std::size_t inner_order = 0;
  std::size_t out_order = 0;
  std::size_t reflection_action_image_order = 0;
  bool is_full_s5 = false;
  bool kernel_equals_inner = false;
  bool closed_under_composition = false;
  bool closed_under_inverse = false;
  std::vector<Permutation5> image_generators;
  std::vector<Permutation5> action;  // per automorphism, aligned with the input list
};

/*
 * Induced permutation of the labelled reflection classes R1..R5 for every
 * automorphism. Throws ReflectionNotPreserved if some automorphism sends a
 * reflection class outside the labelled set.
 */
AutReport out_action_on_reflections(const FiniteMatrixGroup& g, const ClassData& cd, const ReflectionClassSet& labels,
                                    const std::vector<GroupAutomorphism>& automorphisms);

}  // namespace symref

#endif  // SYMREF_AUTOS_HPP
