#include "symref/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace symref {

std::size_t FiniteMatrixGroup::element_order(std::size_t g) const {
  std::size_t n = 1;
  for (std::size_t x = g; x != identity_; x = multiply(x, g)) ++n;
  return n;
}

std::optional<std::size_t> FiniteMatrixGroup::find(const MatrixGQ& m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m, CanonicalLess{});
  if (it == elements_.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteMatrixGroup::index_of(const MatrixGQ& m) const {
  auto idx = find(m);
  if (!idx) throw ContractViolation("matrix is not an element of the group");
  return *idx;
}

std::vector<std::size_t> FiniteMatrixGroup::generated_subgroup(std::span<const std::size_t> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> out{identity_};
  in[identity_] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto s : gens) {
      const auto x = multiply(out[k], s);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteMatrixGroup close_group(std::span<const MatrixGQ> generators, std::size_t cap) {
  if (generators.empty()) throw ContractViolation("close_group needs at least one generator");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) throw ContractViolation("generators must be square of equal dimension");
    if (is_zero(determinant(g))) throw NonInvertibleGenerator("generator is singular: " + to_string(g));
  }

  std::map<MatrixGQ, std::size_t, CanonicalLess> seen;
  std::vector<MatrixGQ> found{MatrixGQ::identity(n)};
  seen.emplace(found.front(), 0);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& s : generators) {
      MatrixGQ x = found[k] * s;
      if (seen.contains(x)) continue;
      if (found.size() >= cap) {
        throw ClosureExceedsCap("closure exceeded " + std::to_string(cap) + " elements");
      }
      seen.emplace(x, found.size());
      found.push_back(std::move(x));
    }
  }

  FiniteMatrixGroup group;
  group.elements_ = std::move(found);
  std::sort(group.elements_.begin(), group.elements_.end(), CanonicalLess{});
  const std::size_t order = group.elements_.size();
  group.identity_ = group.index_of(MatrixGQ::identity(n));
  group.mul_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      group.mul_[a * order + b] = group.index_of(group.elements_[a] * group.elements_[b]);
  group.inv_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (group.mul_[a * order + b] == group.identity_) {
        group.inv_[a] = b;
        break;
      }
    }
  }
  return group;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& g) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    ConjugacyClass cls;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const auto y = g.conjugate(x, h);
      if (!assigned[y]) {
        assigned[y] = true;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> class_lookup(const FiniteMatrixGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> lookup(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto m : classes[c].members) lookup[m] = c;
  return lookup;
}

bool preserves_form(const FiniteMatrixGroup& g, const MatrixGQ& form) {
  if (!form.is_square() || form.rows() != g.dimension())
    throw ContractViolation("form dimension does not match the group");
  return std::all_of(g.matrices().begin(), g.matrices().end(),
                     [&](const MatrixGQ& m) { return m.transpose() * form * m == form; });
}

GroupStructure structure(const FiniteMatrixGroup& g) {
  GroupStructure s;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t h = 0; h < g.order() && central; ++h) central = g.multiply(x, h) == g.multiply(h, x);
    if (central) s.center.push_back(x);
  }
  std::vector<std::size_t> commutators;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const auto c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  s.commutator_subgroup = g.generated_subgroup(commutators);
  s.abelianization_order = g.order() / s.commutator_subgroup.size();
  return s;
}

namespace matrices {

namespace {
const GaussianRational kI = GaussianRational::i();
}

MatrixGQ id2() { return MatrixGQ::identity(2); }
MatrixGQ quaternion_i() { return {{kI, 0}, {0, -kI}}; }
MatrixGQ quaternion_j() { return {{0, -1}, {1, 0}}; }
MatrixGQ quaternion_k() { return {{0, -kI}, {-kI, 0}}; }
MatrixGQ dihedral_rho() { return {{0, -1}, {1, 0}}; }
MatrixGQ dihedral_sigma() { return {{0, 1}, {1, 0}}; }
MatrixGQ omega2() { return {{0, 1}, {-1, 0}}; }

}  // namespace matrices

PaperGroup build_paper_group(std::size_t closure_cap) {
  using namespace matrices;
  const std::vector<MatrixGQ> generators = {
      kronecker(quaternion_i(), id2()),
      kronecker(quaternion_j(), id2()),
      kronecker(id2(), dihedral_rho()),
      kronecker(id2(), dihedral_sigma()),
  };
  PaperGroup pg;
  pg.group = close_group(generators, closure_cap);
  pg.omega = kronecker(omega2(), id2());
  const MatrixGQ rho = dihedral_rho();
  const MatrixGQ sigma = dihedral_sigma();
  const std::array<MatrixGQ, 5> reps = {
      kronecker(quaternion_i(), rho), kronecker(quaternion_j(), rho), kronecker(quaternion_k(), rho),
      kronecker(id2(), sigma),        kronecker(id2(), sigma * rho),
  };
  for (std::size_t k = 0; k < reps.size(); ++k) pg.reflection_representatives[k] = pg.group.index_of(reps[k]);
  pg.minus_identity = pg.group.index_of(-MatrixGQ::identity(4));
  return pg;
}

}  // namespace symref
