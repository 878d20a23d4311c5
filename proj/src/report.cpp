#include "symref/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace symref {

namespace {

constexpr std::uint64_t kPaperSubrepCount = 327679;
constexpr std::size_t kPaperHyperplaneCount = 21;
constexpr std::size_t kPaperHp0 = 10;
constexpr std::size_t kPaperInvertibleClasses = 10;
constexpr std::size_t kPaperOutOrder = 120;
constexpr std::size_t kPaperMaxTwoDimLeaves = 5;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json meta(const Stopwatch& clock, unsigned jobs) {
  return Json{{"elapsed_ms", clock.elapsed_ms()}, {"jobs", jobs}};
}

std::string row_name(const CharacterTable& table, std::size_t row) {
  return row < table.linear_count ? "chi" + std::to_string(row) : "V";
}

Json parameter_json(const ReflectionParameter& c) {
  Json out = Json::object();
  for (std::size_t k = 0; k < kParameterDim; ++k) out[kReflectionLabels[k]] = to_string(c[k]);
  return out;
}

Json int_array(const IntVector5& v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

Json hyperplane_json(const Hyperplane& h) {
  return Json{{"label", h.label()},
              {"kind", h.kind == Hyperplane::Kind::LinearCharacter ? "linear_character" : "coordinate"},
              {"normal", int_array(h.normal)}};
}

}  // namespace

ReflectionParameter unit_parameter() {
  ReflectionParameter c;
  for (auto& x : c.c) x = 1;
  return c;
}

Report facts_report(const PaperModel& model) {
  Stopwatch clock;
  const auto& g = model.pg.group;
  const auto& cd = model.table.class_data;
  const auto st = structure(g);
  const auto reflections = find_reflections(g);

  Json sizes = Json::array();
  for (const auto& cls : cd.classes) sizes.push_back(cls.size());

  Json labels = Json::array();
  bool classes_of_size_two = true;
  for (std::size_t k = 0; k < kParameterDim; ++k) {
    const auto rep = model.labels.representative[k];
    const auto size = cd.classes[model.labels.class_index[k]].size();
    classes_of_size_two = classes_of_size_two && size == 2;
    labels.push_back({{"label", kReflectionLabels[k]},
                      {"name", kReflectionNames[k]},
                      {"representative", to_string(g.matrix(rep))},
                      {"class", model.labels.class_index[k]},
                      {"class_size", size}});
  }

  Report r;
  r.body["command"] = "facts";
  r.body["provenance"] = "computed";
  r.body["order"] = g.order();
  r.body["dimension"] = g.dimension();
  r.body["class_count"] = cd.count();
  r.body["class_sizes"] = sizes;
  r.body["center_size"] = st.center.size();
  r.body["commutator_subgroup_order"] = st.commutator_subgroup.size();
  r.body["abelianization_order"] = st.abelianization_order;
  r.body["form"] = to_string(model.pg.omega);
  r.body["preserves_form"] = preserves_form(g, model.pg.omega);
  r.body["reflection_count"] = reflections.size();
  r.body["reflections_are_noncentral_involutions"] = reflections_equal_noncentral_involutions(g);
  r.body["reflection_classes"] = labels;
  r.body["irreducible_count"] = model.table.rows.size();
  r.body["linear_character_count"] = model.table.linear_count;
  r.body["paper_reference"] = {{"reflection_class_count", 5}, {"irreducible_count", 17}};

  const bool ok = g.order() == 32 && cd.count() == 17 && st.center.size() == 2 && st.abelianization_order == 16 &&
                  r.body["preserves_form"].get<bool>() && reflections.size() == 10 &&
                  r.body["reflections_are_noncentral_involutions"].get<bool>() && classes_of_size_two &&
                  model.table.rows.size() == 17;
  r.body["verified"] = ok;
  r.exit_code = ok ? kExitOk : kExitVerificationFailure;
  r.body["meta"] = meta(clock, 1);
  return r;
}

Report chartable_report(const PaperModel& model) {
  Stopwatch clock;
  const auto& g = model.pg.group;
  const auto& t = model.table;
  const auto& cd = t.class_data;

  Json classes = Json::array();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    classes.push_back({{"label", "C" + std::to_string(c)},
                       {"representative", to_string(g.matrix(cd.classes[c].representative))},
                       {"size", cd.classes[c].size()},
                       {"element_order", g.element_order(cd.classes[c].representative)}});
  }
  Json rows = Json::array();
  for (std::size_t k = 0; k < t.rows.size(); ++k)
    rows.push_back({{"name", row_name(t, k)}, {"dim", t.dims[k]}, {"values", t.rows[k].values}});

  std::int64_t square_sum = 0;
  for (auto d : t.dims) square_sum += d * d;
  bool rows_orthonormal = true;
  for (std::size_t a = 0; a < t.rows.size(); ++a)
    for (std::size_t b = 0; b < t.rows.size(); ++b) {
      const auto expected = a == b ? static_cast<std::int64_t>(t.group_order) : 0;
      rows_orthonormal = rows_orthonormal && weighted_pairing(t.rows[a], t.rows[b], cd) == expected;
    }
  bool columns_orthogonal = true;
  for (std::size_t x = 0; x < cd.count(); ++x)
    for (std::size_t y = 0; y < cd.count(); ++y) {
      std::int64_t sum = 0;
      for (const auto& row : t.rows) sum += row[x] * row[y];
      const auto expected = x == y ? cd.centralizer_order(x, t.group_order) : 0;
      columns_orthogonal = columns_orthogonal && sum == expected;
    }

  Report r;
  r.body["command"] = "chartable";
  r.body["provenance"] = "computed";
  r.body["classes"] = classes;
  r.body["rows"] = rows;
  r.body["dims"] = t.dims;
  r.body["verification"] = {{"row_count", t.rows.size()},
                            {"dim_square_sum", square_sum},
                            {"rows_orthonormal", rows_orthonormal},
                            {"columns_orthogonal", columns_orthogonal}};
  r.body["paper_reference"] = {{"irreducible_count", 17}, {"linear_character_count", 16}};
  const bool ok = rows_orthonormal && columns_orthogonal && square_sum == static_cast<std::int64_t>(t.group_order);
  r.body["verified"] = ok;
  r.exit_code = ok ? kExitOk : kExitVerificationFailure;
  r.body["meta"] = meta(clock, 1);
  return r;
}

Report classify_report(const PaperModel& model, unsigned jobs) {
  Stopwatch clock;
  const auto rep = verify_complemma(model.table, model.ctx, model.hyperplanes, jobs);

  Json per = Json::object();
  for (std::size_t h = 0; h < model.hyperplanes.size(); ++h) per[model.hyperplanes[h].label()] = rep.per_hyperplane[h];
  Json histogram = Json::object();
  for (std::size_t d = 0; d < rep.kernel_dimension_histogram.size(); ++d)
    histogram[std::to_string(d)] = rep.kernel_dimension_histogram[d];
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"index", f.index},
                        {"multiplicities", std::vector<int>(f.multiplicities.m.begin(), f.multiplicities.m.end())},
                        {"kernel_dimension", f.kernel_dimension}});
  }
  Json hyps = Json::array();
  for (const auto& h : model.hyperplanes) hyps.push_back(hyperplane_json(h));

  Report r;
  r.body["command"] = "classify";
  r.body["provenance"] = "computed";
  r.body["candidates"] = rep.candidates;
  r.body["verified"] = rep.verified;
  r.body["failures"] = failures;
  r.body["per_hyperplane"] = per;
  r.body["kernel_dimension_histogram"] = histogram;
  r.body["hyperplane_count"] = model.hyperplanes.size();
  r.body["hyperplanes"] = hyps;
  r.body["paper_reference"] = {
      {"proper_subrepresentations", kPaperSubrepCount},
      {"hyperplane_count", kPaperHyperplaneCount},
      {"note",
       "the candidates here exclude both the zero and the full multiplicity vector; the quoted figure keeps "
       "exactly one of the two"}};
  const bool ok = rep.failures.empty() && rep.verified == rep.candidates;
  r.exit_code = ok ? kExitOk : kExitVerificationFailure;
  r.body["meta"] = meta(clock, jobs);
  return r;
}

Report smooth_report(const PaperModel& model, const ReflectionParameter& c) {
  Stopwatch clock;
  const auto s = smoothness(c, model.hyperplanes);
  Json hit = Json::array();
  for (auto h : s.hyperplanes_hit) hit.push_back(model.hyperplanes[h].label());

  // Cross-check: a linear character extends with V acting by zero exactly on its hyperplane.
  Json one_dim = Json::array();
  bool agrees = true;
  for (const auto& h : model.hyperplanes) {
    if (h.kind != Hyperplane::Kind::LinearCharacter) continue;
    const bool extends = one_dim_rep_check(model.table.rows[h.index], c, model.reflections, model.table.class_data);
    agrees = agrees && extends == h.contains(c);
    if (extends) one_dim.push_back(h.label());
  }

  Report r;
  r.body["command"] = "smooth";
  r.body["provenance"] = "computed";
  r.body["parameter"] = parameter_json(c);
  r.body["verdict"] = s.verdict == SmoothnessReport::Verdict::Smooth ? "Smooth" : "Singular";
  r.body["hyperplanes_hit"] = hit;
  r.body["two_dim_leaves"] = s.two_dim_leaves;
  r.body["one_dim_representations"] = one_dim;
  r.body["one_dim_check_agrees"] = agrees;
  r.body["paper_reference"] = {{"zero_dim_leaf_bound", SmoothnessReport::kZeroDimLeafBound}};
  r.exit_code = !agrees ? kExitVerificationFailure
                        : (s.verdict == SmoothnessReport::Verdict::Smooth ? kExitOk : kExitSingular);
  r.body["meta"] = meta(clock, 1);
  return r;
}

Report leaves_report(const PaperModel& model, const ReflectionParameter& c) {
  Stopwatch clock;
  const auto s = smoothness(c, model.hyperplanes);
  Json zero = Json::array();
  for (std::size_t k = 0; k < kParameterDim; ++k)
    if (is_zero(c[k])) zero.push_back(kReflectionLabels[k]);

  Report r;
  r.body["command"] = "leaves";
  r.body["provenance"] = "computed";
  r.body["parameter"] = parameter_json(c);
  r.body["two_dim_leaves"] = s.two_dim_leaves;
  r.body["vanishing_coordinates"] = zero;
  r.body["singular"] = s.verdict == SmoothnessReport::Verdict::Singular;
  r.body["paper_reference"] = {{"max_two_dim_leaves", kPaperMaxTwoDimLeaves},
                               {"zero_dim_leaf_bound", SmoothnessReport::kZeroDimLeafBound}};
  r.body["meta"] = meta(clock, 1);
  return r;
}

Report hp0_report(const PaperModel& model, unsigned max_degree, unsigned jobs) {
  Stopwatch clock;
  const auto& g = model.pg.group;
  const auto dims = hp0_graded_dims(g, model.pg.omega, max_degree, jobs);
  const auto census = invertible_class_count(g, model.table.class_data.classes);

  Json per = Json::array();
  for (const auto& d : dims.per_degree) {
    per.push_back({{"degree", d.degree},
                   {"invariant_dim", d.invariant_dim},
                   {"bracket_span_dim", d.bracket_span_dim},
                   {"hp0_dim", d.hp0_dim},
                   {"brackets_evaluated", d.brackets_evaluated}});
  }

  Report r;
  r.body["command"] = "hp0";
  r.body["provenance"] = "computed";
  r.body["cutoff"] = dims.cutoff;
  r.body["per_degree"] = per;
  r.body["cumulative_hp0"] = dims.cumulative_hp0;
  r.body["stabilized"] = dims.stabilized;
  r.body["status"] = dims.stabilized ? "conclusive" : "inconclusive";
  r.body["sampled_brackets_invariant"] = dims.sampled_brackets_invariant;
  r.body["invertible_class_count"] = census;
  r.body["census_matches_hp0"] = census == dims.cumulative_hp0;
  r.body["paper_reference"] = {{"dim_hp0", kPaperHp0}, {"invertible_class_count", kPaperInvertibleClasses}};
  r.body["matches_paper"] = dims.cumulative_hp0 == kPaperHp0;
  r.body["census_matches_paper"] = census == kPaperInvertibleClasses;
  std::ostringstream note;
  if (dims.cumulative_hp0 != kPaperHp0)
    note << "truncated HP0 dimension " << dims.cumulative_hp0 << " differs from the quoted " << kPaperHp0 << ". ";
  if (census != kPaperInvertibleClasses)
    note << "class census finds " << census << " classes with g - Id invertible, the quoted count is "
         << kPaperInvertibleClasses << ".";
  std::string text = note.str();
  if (!text.empty() && text.back() == ' ') text.pop_back();
  r.body["discrepancy_note"] = text.empty() ? Json(nullptr) : Json(text);
  r.body["meta"] = meta(clock, jobs);
  return r;
}

Report molien_report(const PaperModel& model, unsigned max_degree) {
  Stopwatch clock;
  Report r;
  r.body["command"] = "molien";
  r.body["provenance"] = "computed";
  r.body["max_degree"] = max_degree;
  r.body["dims"] = molien_dims(model.pg.group, max_degree);
  r.body["meta"] = meta(clock, 1);
  return r;
}

Report aut_report(const PaperModel& model, std::uint64_t cap, unsigned jobs) {
  Stopwatch clock;
  const auto& g = model.pg.group;
  const auto autos = automorphism_group(g, cap, jobs);
  const auto a = out_action_on_reflections(g, model.table.class_data, model.labels, autos);

  Json gens = Json::array();
  for (const auto& p : a.image_generators) gens.push_back(cycle_notation(p));

  Report r;
  r.body["command"] = "aut";
  r.body["provenance"] = "computed";
  r.body["generating_tuple_size"] = greedy_generating_tuple(g).size();
  r.body["aut_order"] = a.aut_order;
  r.body["inner_order"] = a.inner_order;
  r.body["out_order"] = a.out_order;
  r.body["reflection_action_image_order"] = a.reflection_action_image_order;
  r.body["is_full_s5"] = a.is_full_s5;
  r.body["kernel_equals_inner"] = a.kernel_equals_inner;
  r.body["closed_under_composition"] = a.closed_under_composition;
  r.body["closed_under_inverse"] = a.closed_under_inverse;
  r.body["image_generators"] = gens;
  r.body["paper_reference"] = {{"out_order", kPaperOutOrder}, {"out_isomorphic_to", "S5"}};
  const bool ok = a.is_full_s5 && a.kernel_equals_inner && a.closed_under_composition && a.closed_under_inverse;
  r.body["verified"] = ok;
  r.exit_code = ok ? kExitOk : kExitVerificationFailure;
  r.body["meta"] = meta(clock, jobs);
  return r;
}

Report all_report(const PaperModel& model, const ReportOptions& options) {
  Stopwatch clock;
  const std::pair<const char*, Report> parts[] = {
      {"facts", facts_report(model)},
      {"chartable", chartable_report(model)},
      {"classify", classify_report(model, options.jobs)},
      {"smooth", smooth_report(model, unit_parameter())},
      {"hp0", hp0_report(model, options.max_degree, options.jobs)},
      {"aut", aut_report(model, options.aut_cap, options.jobs)},
  };
  Report r;
  r.body["command"] = "all";
  Json codes = Json::object();
  for (const auto& [name, part] : parts) {
    r.body[name] = part.body;
    codes[name] = part.exit_code;
    if (part.exit_code != kExitOk) r.exit_code = kExitVerificationFailure;
  }
  r.body["exit_codes"] = codes;
  r.body["meta"] = meta(clock, options.jobs);
  return r;
}

Json strip_meta(const Json& body) {
  if (body.is_object()) {
    Json out = Json::object();
    for (const auto& [key, value] : body.items())
      if (key != "meta") out[key] = strip_meta(value);
    return out;
  }
  if (body.is_array()) {
    Json out = Json::array();
    for (const auto& value : body) out.push_back(strip_meta(value));
    return out;
  }
  return body;
}

namespace {

void render(const Json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, value] : node.items()) render(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && !node.empty() && std::any_of(node.begin(), node.end(), [](const Json& v) {
               return v.is_structured();
             })) {
    for (std::size_t k = 0; k < node.size(); ++k) render(node[k], path + "[" + std::to_string(k) + "]", out);
  } else {
    out << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& body) {
  std::ostringstream out;
  render(body, "", out);
  return out.str();
}

}  // namespace symref
