#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "antihorn/harness.hpp"

namespace {

void printVerbose(const antihorn::RunReport& report) {
  for (const antihorn::RunRecord& rec : report.records) {
    std::cout << rec.id << "  " << rec.wall_ms << " ms";
    for (const auto& [key, value] : rec.counters) std::cout << "  " << key << "=" << value;
    std::cout << "\n";
    for (const antihorn::CheckResult& c : rec.checks)
      std::cout << "    " << (c.passed ? "ok   " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace antihorn;

  CLI::App app{"anti-Horn learning, clause-transform, and assignment-recovery simulator"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string density = cfg.density.str();
  if (const char* env = std::getenv("AHSIM_OUT")) cfg.out_dir = env;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "experiment seed");
    sub->add_option("--out", cfg.out_dir, "directory for report.json and summary.txt");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("-v,--verbose", cfg.verbosity, "print per-record timings and counters");
  };

  CLI::App* learn = app.add_subcommand("learn", "run the list learner across sparse-set worlds");
  learn->add_option("--worlds", cfg.worlds, "number of generated worlds");
  learn->add_option("--k", cfg.k_max, "largest clause width; worlds cycle k = 1..k")
      ->check(CLI::Range(1, 3));
  learn->add_option("--n-max", cfg.n_max, "largest word-length horizon; worlds cycle 2..n-max");
  learn->add_option("--density", density, "sparse-set fill density, a rational like 3/4");
  learn->add_option("--scenario", cfg.scenario_files, "world files to run instead of generating");
  learn->add_option("--dump-scenarios", cfg.dump_scenarios, "write the generated worlds to this directory");
  addCommon(learn);

  CLI::App* transform = app.add_subcommand("transform", "check the clause transform on random formulas");
  transform->add_option("--formulas", cfg.formulas, "number of random formula/sparse-set instances");
  addCommon(transform);

  CLI::App* recover = app.add_subcommand("recover", "recover unique satisfying assignments over GF(2^m)");
  recover->add_option("--formulas", cfg.formulas, "number of generated formulas");
  recover->add_option("--vars", cfg.vars, "largest variable count per formula")->check(CLI::Range(1, 8));
  recover->add_option("--m", cfg.m_allowed, "allowed field degrees (from 2, 6, 18)");
  recover->add_flag("--include-unsat", cfg.include_unsat, "make every fifth formula unsatisfiable");
  addCommon(recover);

  CLI::App* selftest = app.add_subcommand("selftest", "full acceptance suite at fixed scale");
  addCommon(selftest);

  CLI11_PARSE(app, argc, argv);

  try {
    if (learn->parsed()) cfg.command = Command::Learn;
    if (transform->parsed()) cfg.command = Command::Transform;
    if (recover->parsed()) cfg.command = Command::Recover;
    if (selftest->parsed()) cfg.command = Command::Selftest;
    cfg.density = Rational::parse(density);
    cfg.validate();

    const RunReport report = run(cfg);
    if (cfg.verbosity > 0) printVerbose(report);
    std::cout << report.summaryText();
    if (!cfg.out_dir.empty()) std::cout << "\nreport written to " << cfg.out_dir << "\n";
    return report.allPassed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
