#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "antihorn/dimacs.hpp"
#include "antihorn/poly.hpp"
#include "antihorn/report.hpp"
#include "antihorn/world.hpp"

namespace antihorn {

enum class Command { Learn, Transform, Recover, Selftest };

std::string commandName(Command c);
Command parseCommand(std::string_view name);

// Everything that shapes an experiment.  Execution details (jobs, verbosity,
// output directory) deliberately stay out of the report's config echo so
// that they cannot change report bytes.
struct ExperimentConfig {
  Command command = Command::Selftest;
  std::uint64_t seed = 42;

  // learn
  int worlds = 200;
  int k_max = 3;                      // worlds cycle k = 1..k_max
  int n_max = 8;                      // worlds cycle horizons 2..n_max
  Rational density{3, 4};             // sparse-set fill
  std::vector<std::string> scenario_files;  // run these worlds instead of generating
  std::string dump_scenarios;         // save generated worlds here (learn only)

  // transform / recover
  int formulas = 500;                 // transform instances; recover formulas
  int vars = 6;                       // recover: variable cap
  std::vector<int> m_allowed = {2, 6};
  bool include_unsat = false;         // recover: every fifth formula unsatisfiable

  // execution
  std::string out_dir;                // empty: write no files
  int jobs = 1;
  int verbosity = 0;

  void validate() const;  // throws std::invalid_argument on out-of-cap values
  std::map<std::string, std::string> echo() const;
};

// Parameters of the index-th generated world of a learn run; pure in
// (cfg.seed, cfg caps, index).
WorldParams learnWorldParams(const ExperimentConfig& cfg, int index);

// Learner suite: per world, learn_sat for every left-hand word arising in
// the reduction table (folding the Claim A checks) and learn_all (folding
// Claim B), one record per world.
RunReport runLearn(const ExperimentConfig& cfg);

// Transform suite: random bounded CNF/DNF instances over short words with
// random word sets; checks satisfaction preservation, negation
// complementarity, and the composed reduction, in batches of 100.
RunReport runTransform(const ExperimentConfig& cfg);

// Recovery suite: a field-axiom record, then one record per generated
// formula comparing recover_assignment with the exhaustive oracle.
RunReport runRecover(const ExperimentConfig& cfg);

// The acceptance suite: criteria 1-6 from the learn/transform/recover
// suites plus the repeat-run byte-identity check as criterion 7.
RunReport runSelftest(const ExperimentConfig& cfg);

// Dispatches on cfg.command; writes report files when out_dir is set.
RunReport run(const ExperimentConfig& cfg);

// Deterministic CNF with exactly one satisfying assignment.
CnfFormula makeUniquelySatisfiableCnf(std::uint64_t seed, int n);
// Deterministic unsatisfiable CNF.
CnfFormula makeUnsatisfiableCnf(std::uint64_t seed, int n);

}  // namespace antihorn
