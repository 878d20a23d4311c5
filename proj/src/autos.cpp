#include "symref/autos.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace symref {

GroupAutomorphism compose(const GroupAutomorphism& alpha, const GroupAutomorphism& beta) {
  GroupAutomorphism out{std::vector<std::size_t>(beta.perm.size())};
  for (std::size_t x = 0; x < beta.perm.size(); ++x) out.perm[x] = alpha.perm[beta.perm[x]];
  return out;
}

GroupAutomorphism invert(const GroupAutomorphism& alpha) {
  GroupAutomorphism out{std::vector<std::size_t>(alpha.perm.size())};
  for (std::size_t x = 0; x < alpha.perm.size(); ++x) out.perm[alpha.perm[x]] = x;
  return out;
}

GroupAutomorphism conjugation(const FiniteMatrixGroup& g, std::size_t h) {
  GroupAutomorphism out{std::vector<std::size_t>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) out.perm[x] = g.conjugate(x, h);
  return out;
}

bool is_automorphism(const FiniteMatrixGroup& g, const GroupAutomorphism& alpha) {
  if (alpha.perm.size() != g.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (auto y : alpha.perm) {
    if (y >= g.order() || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (alpha(g.multiply(x, y)) != g.multiply(alpha(x), alpha(y))) return false;
  return true;
}

std::vector<std::size_t> greedy_generating_tuple(const FiniteMatrixGroup& g) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> sub{g.identity()};
  for (std::size_t x = 0; x < g.order() && sub.size() < g.order(); ++x) {
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    sub = g.generated_subgroup(gens);
  }
  // Drop generators the others already generate, earliest first.
  for (std::size_t k = 0; k < gens.size();) {
    std::vector<std::size_t> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (g.generated_subgroup(rest).size() == g.order()) {
      gens = std::move(rest);
    } else {
      ++k;
    }
  }
  return gens;
}

namespace {

/// Spanning tree of the Cayley graph for the generators, rooted at the identity.
struct CayleyTree {
  std::vector<std::size_t> bfs_order;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;  // generator position: element = parent * gens[via]
};

CayleyTree cayley_tree(const FiniteMatrixGroup& g, const std::vector<std::size_t>& gens) {
  CayleyTree t;
  t.parent.assign(g.order(), g.order());
  t.via.assign(g.order(), 0);
  t.bfs_order.push_back(g.identity());
  t.parent[g.identity()] = g.identity();
  for (std::size_t k = 0; k < t.bfs_order.size(); ++k) {
    const auto x = t.bfs_order[k];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto y = g.multiply(x, gens[s]);
      if (t.parent[y] != g.order()) continue;
      t.parent[y] = x;
      t.via[y] = s;
      t.bfs_order.push_back(y);
    }
  }
  return t;
}

/// Extends a tuple of generator images to a map on the group, or returns false.
bool extend(const FiniteMatrixGroup& g, const std::vector<std::size_t>& gens, const CayleyTree& tree,
            const std::vector<std::size_t>& images, GroupAutomorphism& out) {
  const std::size_t n = g.order();
  out.perm.assign(n, n);
  out.perm[g.identity()] = g.identity();
  for (std::size_t k = 1; k < tree.bfs_order.size(); ++k) {
    const auto x = tree.bfs_order[k];
    out.perm[x] = g.multiply(out.perm[tree.parent[x]], images[tree.via[x]]);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (out.perm[g.multiply(x, gens[s])] != g.multiply(out.perm[x], images[s])) return false;
  std::vector<bool> hit(n, false);
  for (auto y : out.perm) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

}  // namespace

std::vector<GroupAutomorphism> automorphism_group(const FiniteMatrixGroup& g, std::uint64_t cap, unsigned jobs) {
  const auto gens = greedy_generating_tuple(g);
  long double space = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) space *= static_cast<long double>(g.order());
  if (space > static_cast<long double>(cap)) {
    throw SearchSpaceExceeded("automorphism search over " + std::to_string(gens.size()) +
                              " generator images exceeds the cap of " + std::to_string(cap));
  }

  const auto cd = ClassData::of(g);
  std::vector<std::size_t> order(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) order[x] = g.element_order(x);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (order[y] == order[gens[s]] &&
          cd.classes[cd.class_of[y]].size() == cd.classes[cd.class_of[gens[s]]].size())
        candidates[s].push_back(y);

  const auto tree = cayley_tree(g, gens);
  auto search_first = [&](std::size_t first_begin, std::size_t first_end) {
    std::vector<GroupAutomorphism> found;
    std::vector<std::size_t> images(gens.size());
    GroupAutomorphism alpha;
    auto recurse = [&](auto&& self, std::size_t pos) -> void {
      if (pos == gens.size()) {
        if (extend(g, gens, tree, images, alpha)) found.push_back(alpha);
        return;
      }
      const std::size_t begin = pos == 0 ? first_begin : 0;
      const std::size_t end = pos == 0 ? first_end : candidates[pos].size();
      for (std::size_t k = begin; k < end; ++k) {
        images[pos] = candidates[pos][k];
        self(self, pos + 1);
      }
    };
    recurse(recurse, 0);
    return found;
  };

  std::vector<GroupAutomorphism> all;
  if (gens.empty()) {
    all.push_back({std::vector<std::size_t>{g.identity()}});
  } else {
    const std::size_t first_count = candidates[0].size();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(first_count, 1))));
    std::vector<std::vector<GroupAutomorphism>> partial(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::size_t b = first_count * w / jobs;
      const std::size_t e = first_count * (w + 1) / jobs;
      workers.emplace_back([&, w, b, e] { partial[w] = search_first(b, e); });
    }
    for (auto& t : workers) t.join();
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& a : all)
    if (!is_automorphism(g, a)) throw ContractViolation("automorphism search produced a non-automorphism");
  return all;
}

std::string cycle_notation(const Permutation5& p) {
  std::string out;
  std::array<bool, 5> seen{};
  for (std::size_t start = 0; start < 5; ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += kReflectionLabels[x];
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

Permutation5 compose5(const Permutation5& a, const Permutation5& b) {
  Permutation5 out{};
  for (std::size_t k = 0; k < 5; ++k) out[k] = a[b[k]];
  return out;
}

std::set<Permutation5> generated(const std::vector<Permutation5>& gens) {
  std::set<Permutation5> group{{0, 1, 2, 3, 4}};
  std::vector<Permutation5> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<Permutation5> next;
    for (const auto& x : frontier)
      for (const auto& s : gens)
        if (auto y = compose5(x, s); group.insert(y).second) next.push_back(y);
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

AutReport out_action_on_reflections(const FiniteMatrixGroup& g, const ClassData& cd, const ReflectionClassSet& labels,
                                    const std::vector<GroupAutomorphism>& automorphisms) {
  AutReport r;
  r.aut_order = automorphisms.size();

  std::set<GroupAutomorphism> inner;
  for (std::size_t h = 0; h < g.order(); ++h) inner.insert(conjugation(g, h));
  r.inner_order = inner.size();
  r.out_order = r.inner_order == 0 ? 0 : r.aut_order / r.inner_order;

  std::set<GroupAutomorphism> kernel;
  std::set<Permutation5> image;
  for (const auto& a : automorphisms) {
    Permutation5 p{};
    for (std::size_t k = 0; k < 5; ++k) {
      const auto target_class = cd.class_of[a(labels.representative[k])];
      const auto it = std::find(labels.class_index.begin(), labels.class_index.end(), target_class);
      if (it == labels.class_index.end())
        throw ReflectionNotPreserved(std::string("an automorphism moves ") + kReflectionLabels[k] +
                                     " off the symplectic reflections");
      p[k] = static_cast<std::uint8_t>(it - labels.class_index.begin());
    }
    r.action.push_back(p);
    image.insert(p);
    if (p == Permutation5{0, 1, 2, 3, 4}) kernel.insert(a);
  }
  r.reflection_action_image_order = image.size();
  r.is_full_s5 = image.size() == 120;
  r.kernel_equals_inner = kernel == inner;

  // Automorphisms are determined by the images of a generating tuple.
  const auto gens = greedy_generating_tuple(g);
  auto key = [&](const GroupAutomorphism& a) {
    std::vector<std::size_t> k;
    for (auto s : gens) k.push_back(a(s));
    return k;
  };
  std::set<std::vector<std::size_t>> keys;
  for (const auto& a : automorphisms) keys.insert(key(a));
  r.closed_under_composition = true;
  for (const auto& a : automorphisms) {
    for (const auto& b : automorphisms) {
      std::vector<std::size_t> k;
      for (auto s : gens) k.push_back(a(b(s)));
      if (!keys.contains(k)) {
        r.closed_under_composition = false;
        break;
      }
    }
    if (!r.closed_under_composition) break;
  }
  r.closed_under_inverse = std::all_of(automorphisms.begin(), automorphisms.end(),
                                       [&](const GroupAutomorphism& a) { return keys.contains(key(invert(a))); });

  for (const auto& p : image) {
    if (generated(r.image_generators).contains(p)) continue;
    r.image_generators.push_back(p);
    if (generated(r.image_generators).size() == image.size()) break;
  }
  return r;
}

}  // namespace symref
