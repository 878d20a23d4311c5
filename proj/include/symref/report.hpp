#ifndef SYMREF_REPORT_HPP
#define SYMREF_REPORT_HPP

#include <cstdint>
#include <string>

#include "json.hpp"
#include "symref/autos.hpp"
#include "symref/conditions.hpp"
#include "symref/hp0.hpp"

namespace symref {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitSingular = 1;
inline constexpr int kExitVerificationFailure = 2;
inline constexpr int kExitUsage = 3;

/*
 * A deterministic report. Computed values sit at the top level, values quoted
 * from the literature sit under "paper_reference", and wall-clock data and the
 * worker count sit under "meta", so everything outside "meta" is identical
 * across runs and job counts.
 */
struct Report {
  Json body;
  int exit_code = kExitOk;
};

struct ReportOptions {
  unsigned jobs = 1;
  unsigned max_degree = kDefaultHp0Cutoff;
  std::uint64_t aut_cap = kDefaultAutSearchCap;
};

Report facts_report(const PaperModel& model);
Report chartable_report(const PaperModel& model);
Report classify_report(const PaperModel& model, unsigned jobs);
Report smooth_report(const PaperModel& model, const ReflectionParameter& c);
Report leaves_report(const PaperModel& model, const ReflectionParameter& c);
Report hp0_report(const PaperModel& model, unsigned max_degree, unsigned jobs);
Report molien_report(const PaperModel& model, unsigned max_degree);
Report aut_report(const PaperModel& model, std::uint64_t cap, unsigned jobs);

/// facts, chartable, classify, smooth at c = 1, hp0 and aut, aggregated.
Report all_report(const PaperModel& model, const ReportOptions& options);

/// The constant parameter c = 1.
ReflectionParameter unit_parameter();

/// Copy with every "meta" object removed, at any depth.
Json strip_meta(const Json& body);

/// One "path: value" line per leaf.
std::string render_text(const Json& body);

}  // namespace symref

#endif  // SYMREF_REPORT_HPP
