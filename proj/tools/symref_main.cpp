#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "symref/report.hpp"

namespace {

using namespace symref;

struct RunConfig {
  std::string command;
  std::string c_file;
  unsigned max_degree = kDefaultHp0Cutoff;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "json";
  std::size_t closure_cap = kDefaultClosureCap;
  std::uint64_t aut_cap = kDefaultAutSearchCap;
};

ReflectionParameter load_parameter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open parameter file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_parameter_json(text.str());
}

Report dispatch(const RunConfig& cfg) {
  const auto model = PaperModel::build(cfg.closure_cap);
  if (cfg.command == "facts") return facts_report(model);
  if (cfg.command == "chartable") return chartable_report(model);
  if (cfg.command == "classify") return classify_report(model, cfg.jobs);
  if (cfg.command == "smooth") return smooth_report(model, load_parameter(cfg.c_file));
  if (cfg.command == "leaves") return leaves_report(model, load_parameter(cfg.c_file));
  if (cfg.command == "hp0") return hp0_report(model, cfg.max_degree, cfg.jobs);
  if (cfg.command == "molien") return molien_report(model, cfg.max_degree);
  if (cfg.command == "aut") return aut_report(model, cfg.aut_cap, cfg.jobs);
  return all_report(model, {cfg.jobs, cfg.max_degree, cfg.aut_cap});
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact verification of the order-32 symplectic reflection group computations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--closure-cap", cfg.closure_cap, "Maximum group order during closure")->check(CLI::PositiveNumber);
  app.add_option("--aut-cap", cfg.aut_cap, "Maximum automorphism search space")->check(CLI::PositiveNumber);

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&cfg, name] { cfg.command = name; });
    return sub;
  };
  add("facts", "Group order, classes, center, form and reflection labels");
  add("chartable", "Character table with orthogonality checks");
  add("classify", "Check every proper subrepresentation against the 21 hyperplanes");
  add("smooth", "Smoothness verdict for a parameter")->add_option("--c", cfg.c_file, "Parameter JSON")->required();
  add("leaves", "Two-dimensional leaf count for a parameter")
      ->add_option("--c", cfg.c_file, "Parameter JSON")
      ->required();
  add("hp0", "Truncated zeroth Poisson homology of the invariant ring")
      ->add_option("--max-degree", cfg.max_degree, "Degree cutoff")
      ->check(CLI::Range(2u, 1000u));
  add("molien", "Graded dimensions of the invariant ring")->add_option("--max-degree", cfg.max_degree, "Degree cutoff");
  add("aut", "Automorphism group and its action on the reflection classes");
  add("all", "facts, chartable, classify, smooth at c = 1, hp0 and aut")
      ->add_option("--max-degree", cfg.max_degree, "Degree cutoff for hp0")
      ->check(CLI::Range(2u, 1000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Report report = dispatch(cfg);
    if (cfg.format == "json") {
      std::cout << report.body.dump(2) << "\n";
    } else {
      std::cout << render_text(report.body);
    }
    return report.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "symref: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "symref: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}
