#ifndef SYMREF_CHARS_HPP
#define SYMREF_CHARS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symref/group.hpp"

namespace symref {

/// Integer values indexed by conjugacy class.
struct ClassFunction {
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::size_t cls) const { return values[cls]; }
  std::size_t size() const { return values.size(); }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/*
 * Classes, element->class lookup and centralizer orders of a finite group,
 * bundled because every character computation needs all three.
 */
struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;

  static ClassData of(const FiniteMatrixGroup& g);
  std::size_t count() const { return classes.size(); }
  std::int64_t centralizer_order(std::size_t cls, std::size_t group_order) const {
    return static_cast<std::int64_t>(group_order / classes[cls].size());
  }
};

/// Every homomorphism G -> {+1,-1}; the trivial character comes first.
/// Throws UnsupportedAbelianization unless G/[G,G] is elementary abelian of exponent 2.
std::vector<ClassFunction> linear_characters(const FiniteMatrixGroup& g, const ClassData& cd);

/// Trace of each class representative. Throws NonIntegerTrace.
ClassFunction defining_character(const FiniteMatrixGroup& g, const ClassData& cd);

/// sum over elements of a(x) b(x), i.e. |G| times the usual inner product
/// (characters here are real, so no conjugation).
std::int64_t weighted_pairing(const ClassFunction& a, const ClassFunction& b, const ClassData& cd);

struct CharacterTable {
  std::size_t group_order = 0;
  ClassData class_data;
  std::vector<ClassFunction> rows;  // linear characters first, defining character last
  std::vector<std::int64_t> dims;
  std::size_t linear_count = 0;
  std::size_t identity_class = 0;
};

/// Builds and verifies the table (dimension sum, row and column orthogonality).
/// Throws TableInconsistent naming the failed check.
CharacterTable character_table(const FiniteMatrixGroup& g);

/*
 * Multiplicities of irreducible constituents of a subrepresentation of the
 * regular representation: 0 <= m[i] <= dims[i].
 */
struct MultiplicityVector {
  std::vector<std::uint8_t> m;
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/*
 * Enumerates every multiplicity vector except the zero vector and the full
 * one (the regular representation), in lexicographic order. Candidates are
 * addressed by a dense index in [0, count()), so disjoint index ranges can be
 * handed to separate workers.
 */
class SubrepEnumerator {
 public:
  explicit SubrepEnumerator(const CharacterTable& table);

  std::uint64_t count() const { return total_ - 2; }
  /// Number of tuples including the two excluded endpoints.
  std::uint64_t tuple_count() const { return total_; }

  MultiplicityVector at(std::uint64_t index) const;
  ClassFunction character(const MultiplicityVector& mv) const;

  template <typename Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    MultiplicityVector mv = at(begin);
    for (std::uint64_t k = begin; k < end; ++k) {
      fn(k, static_cast<const MultiplicityVector&>(mv));
      increment(mv);
    }
  }

 private:
  void increment(MultiplicityVector& mv) const;

  const CharacterTable* table_;
  std::uint64_t total_ = 1;
};

}  // namespace symref

#endif  // SYMREF_CHARS_HPP
