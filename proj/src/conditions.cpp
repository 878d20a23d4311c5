#include "symref/conditions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace symref {

bool TraceConditionSystem::is_zero() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const IntVector5& r) { return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; }); });
}

MatrixQ TraceConditionSystem::to_matrix() const {
  MatrixQ m(kConditionRows, kParameterDim);
  for (std::size_t r = 0; r < kConditionRows; ++r)
    for (std::size_t c = 0; c < kParameterDim; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  return m;
}

ConditionContext make_condition_context(const PaperGroup& pg, const ClassData& cd,
                                        const std::array<std::size_t, kParameterDim>& representatives) {
  const auto& g = pg.group;
  ConditionContext ctx;
  ctx.minus_identity_class = cd.class_of[pg.minus_identity];
  for (std::size_t j = 0; j < kParameterDim; ++j) {
    ctx.reflection_class[j] = cd.class_of[representatives[j]];
    ctx.negated_reflection_class[j] = cd.class_of[g.multiply(pg.minus_identity, representatives[j])];
  }
  for (std::size_t i = 0; i < kParameterDim; ++i)
    for (std::size_t j = 0; j < kParameterDim; ++j) {
      const auto product = g.multiply(representatives[i], representatives[j]);
      ctx.product_class[i][j] = cd.class_of[product];
      ctx.negated_product_class[i][j] = cd.class_of[g.multiply(pg.minus_identity, product)];
    }
  return ctx;
}

TraceConditionSystem build_system(const ClassFunction& chi, const ConditionContext& ctx) {
  TraceConditionSystem sys;
  for (std::size_t j = 0; j < kParameterDim; ++j)
    sys.rows[0][j] = chi[ctx.reflection_class[j]] + chi[ctx.negated_reflection_class[j]];
  for (std::size_t i = 0; i < kParameterDim; ++i)
    for (std::size_t j = 0; j < kParameterDim; ++j) {
      sys.rows[i + 1][j] = i == j ? 2 * chi[ctx.minus_identity_class]
                                  : chi[ctx.product_class[i][j]] + chi[ctx.negated_product_class[i][j]];
    }
  return sys;
}

std::vector<std::vector<Rational>> solution_space(const TraceConditionSystem& system) {
  return kernel_basis(system.to_matrix());
}

std::string Hyperplane::label() const {
  if (kind == Kind::Coordinate) return std::string("c_") + kReflectionLabels[index];
  return "chi" + std::to_string(index);
}

bool Hyperplane::contains(const std::vector<Rational>& v) const {
  Rational dot;
  for (std::size_t j = 0; j < kParameterDim; ++j)
    if (normal[j] != 0) dot += Rational(static_cast<long>(normal[j])) * v[j];
  return is_zero(dot);
}

bool Hyperplane::contains(const ReflectionParameter& c) const {
  return contains(std::vector<Rational>(c.c.begin(), c.c.end()));
}

IntVector5 canonical_normal(IntVector5 v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) throw ContractViolation("zero normal vector");
  const auto lead = *std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

std::vector<Hyperplane> hyperplane_set(const CharacterTable& table, const ConditionContext& ctx) {
  std::vector<Hyperplane> out;
  for (std::size_t k = 0; k < table.linear_count; ++k) {
    const auto& chi = table.rows[k];
    if (chi[ctx.minus_identity_class] != 1)
      throw HyperplaneCollision("linear character " + std::to_string(k) + " has chi(-Id) != 1");
    std::int64_t product = 1;
    IntVector5 normal{};
    for (std::size_t j = 0; j < kParameterDim; ++j) {
      normal[j] = chi[ctx.reflection_class[j]];
      product *= normal[j];
    }
    if (product != 1)
      throw HyperplaneCollision("linear character " + std::to_string(k) + " has prod chi(s_j) != 1");
    out.push_back({Hyperplane::Kind::LinearCharacter, k, canonical_normal(normal)});
  }
  for (std::size_t j = 0; j < kParameterDim; ++j) {
    IntVector5 normal{};
    normal[j] = 1;
    out.push_back({Hyperplane::Kind::Coordinate, j, normal});
  }
  std::set<IntVector5> distinct;
  for (const auto& h : out) distinct.insert(h.normal);
  if (distinct.size() != out.size()) throw HyperplaneCollision("two hyperplanes share a canonical normal");
  return out;
}

std::vector<std::size_t> containing_hyperplanes(const std::vector<std::vector<Rational>>& kernel,
                                                const std::vector<Hyperplane>& hyperplanes) {
  std::vector<std::size_t> hits;
  for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
    if (std::all_of(kernel.begin(), kernel.end(), [&](const auto& v) { return hyperplanes[h].contains(v); }))
      hits.push_back(h);
  }
  return hits;
}

ClassificationReport classify_range(const CharacterTable& table, const ConditionContext& ctx,
                                    const std::vector<Hyperplane>& hyperplanes, std::uint64_t begin,
                                    std::uint64_t end) {
  const SubrepEnumerator subreps(table);
  ClassificationReport report;
  report.per_hyperplane.assign(hyperplanes.size(), 0);
  subreps.for_each(begin, end, [&](std::uint64_t index, const MultiplicityVector& mv) {
    ++report.candidates;
    const auto kernel = solution_space(build_system(subreps.character(mv), ctx));
    ++report.kernel_dimension_histogram[kernel.size()];
    const auto hits = containing_hyperplanes(kernel, hyperplanes);
    for (auto h : hits) ++report.per_hyperplane[h];
    if (hits.empty()) {
      report.failures.push_back({index, mv, kernel.size()});
    } else {
      ++report.verified;
    }
  });
  return report;
}

ClassificationReport verify_complemma(const CharacterTable& table, const ConditionContext& ctx,
                                      const std::vector<Hyperplane>& hyperplanes, unsigned jobs) {
  const std::uint64_t total = SubrepEnumerator(table).count();
  jobs = std::max(1u, jobs);
  std::vector<ClassificationReport> partial(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = total * w / jobs;
    const std::uint64_t end = total * (w + 1) / jobs;
    workers.emplace_back([&, w, begin, end] { partial[w] = classify_range(table, ctx, hyperplanes, begin, end); });
  }
  for (auto& t : workers) t.join();

  ClassificationReport merged;
  merged.per_hyperplane.assign(hyperplanes.size(), 0);
  for (auto& p : partial) {
    merged.candidates += p.candidates;
    merged.verified += p.verified;
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) merged.per_hyperplane[h] += p.per_hyperplane[h];
    for (std::size_t d = 0; d < merged.kernel_dimension_histogram.size(); ++d)
      merged.kernel_dimension_histogram[d] += p.kernel_dimension_histogram[d];
    std::move(p.failures.begin(), p.failures.end(), std::back_inserter(merged.failures));
  }
  return merged;
}

SmoothnessReport smoothness(const ReflectionParameter& c, const std::vector<Hyperplane>& hyperplanes) {
  SmoothnessReport report;
  for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
    if (!hyperplanes[h].contains(c)) continue;
    report.hyperplanes_hit.push_back(h);
    if (hyperplanes[h].kind == Hyperplane::Kind::Coordinate) ++report.two_dim_leaves;
  }
  report.verdict = report.hyperplanes_hit.empty() ? SmoothnessReport::Verdict::Smooth
                                                  : SmoothnessReport::Verdict::Singular;
  return report;
}

std::vector<LabelledReflection> labelled_reflections(const PaperGroup& pg, const ClassData& cd,
                                                     const ReflectionClassSet& labels) {
  std::vector<LabelledReflection> out;
  for (auto s : find_reflections(pg.group)) {
    const auto it = std::find(labels.class_index.begin(), labels.class_index.end(), cd.class_of[s]);
    if (it == labels.class_index.end()) throw TableInconsistent("unlabelled reflection class");
    out.push_back({s, static_cast<std::size_t>(it - labels.class_index.begin()), omega_s(pg.group.matrix(s), pg.omega)});
  }
  return out;
}

bool one_dim_rep_check(const ClassFunction& chi, const ReflectionParameter& c,
                       const std::vector<LabelledReflection>& reflections, const ClassData& cd) {
  if (reflections.empty()) return true;
  const std::size_t n = reflections.front().omega_s.rows();
  MatrixGQ total(n, n);
  for (const auto& r : reflections) {
    const Rational weight = c[r.label] * chi[cd.class_of[r.element]];
    if (is_zero(weight)) continue;
    total += r.omega_s * GaussianRational(weight);
  }
  return total.is_zero();
}

PaperModel PaperModel::build(std::size_t closure_cap) {
  PaperModel m;
  m.pg = build_paper_group(closure_cap);
  m.table = character_table(m.pg.group);
  m.labels = label_reflection_classes(m.pg, m.table.class_data);
  m.ctx = make_condition_context(m.pg, m.table.class_data, m.labels.representative);
  m.hyperplanes = hyperplane_set(m.table, m.ctx);
  m.reflections = labelled_reflections(m.pg, m.table.class_data, m.labels);
  return m;
}

}  // namespace symref
