#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "antihorn/dimacs.hpp"
#include "antihorn/harness.hpp"
#include "antihorn/report.hpp"

using namespace antihorn;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(bool(f));
  return std::string(std::istreambuf_iterator<char>(f), {});
}

fs::path freshDir(const char* leaf) {
  const fs::path dir = fs::temp_directory_path() / "antihorn-unit" / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentConfig smallLearnConfig() {
  ExperimentConfig cfg;
  cfg.command = Command::Learn;
  cfg.seed = 42;
  cfg.worlds = 4;
  cfg.k_max = 2;
  cfg.n_max = 4;
  return cfg;
}

}  // namespace

TEST_CASE("command names round-trip") {
  for (Command c : {Command::Learn, Command::Transform, Command::Recover,
                    Command::Selftest})
    CHECK(parseCommand(commandName(c)) == c);
  CHECK(commandName(Command::Learn) == "learn");
  CHECK_THROWS_AS(parseCommand("explore"), std::invalid_argument);
}

TEST_CASE("configuration caps are validated") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  auto expectInvalid = [](ExperimentConfig c) {
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  };
  { ExperimentConfig c; c.worlds = -1; expectInvalid(c); }
  { ExperimentConfig c; c.k_max = 0; expectInvalid(c); }
  { ExperimentConfig c; c.k_max = 4; expectInvalid(c); }
  { ExperimentConfig c; c.n_max = 1; expectInvalid(c); }
  { ExperimentConfig c; c.n_max = kMaxHorizon + 1; expectInvalid(c); }
  { ExperimentConfig c; c.density = Rational{5, 4}; expectInvalid(c); }
  { ExperimentConfig c; c.density = Rational{1, 0}; expectInvalid(c); }
  { ExperimentConfig c; c.formulas = -1; expectInvalid(c); }
  { ExperimentConfig c; c.vars = 0; expectInvalid(c); }
  { ExperimentConfig c; c.vars = 9; expectInvalid(c); }
  { ExperimentConfig c; c.m_allowed = {}; expectInvalid(c); }
  { ExperimentConfig c; c.m_allowed = {4}; expectInvalid(c); }
  { ExperimentConfig c; c.jobs = 0; expectInvalid(c); }
}

TEST_CASE("the config echo excludes execution details") {
  ExperimentConfig cfg = smallLearnConfig();
  cfg.jobs = 7;
  cfg.verbosity = 2;
  cfg.out_dir = "/tmp/somewhere";
  const auto echo = cfg.echo();
  CHECK(echo.at("command") == "learn");
  CHECK(echo.at("seed") == "42");
  CHECK(echo.at("worlds") == "4");
  CHECK(echo.at("density") == "3/4");
  CHECK(echo.count("jobs") == 0);
  CHECK(echo.count("verbosity") == 0);
  CHECK(echo.count("out_dir") == 0);
  CHECK(echo.count("scenario_files") == 0);
  cfg.scenario_files = {"a.json", "b.json"};
  CHECK(cfg.echo().at("scenario_files") == "a.json;b.json");
}

TEST_CASE("generated world parameters stay inside the acceptance caps") {
  ExperimentConfig cfg;
  cfg.k_max = 3;
  cfg.n_max = 8;
  bool seen_k[4] = {};
  for (int i = 0; i < 60; ++i) {
    const WorldParams p = learnWorldParams(cfg, i);
    CHECK(p.k >= 1);
    CHECK(p.k <= 3);
    seen_k[p.k] = true;
    CHECK(p.n_max >= 2);
    CHECK(p.n_max <= 8);
    const std::uint64_t q = p.bound(static_cast<std::uint64_t>(p.n_max));
    CHECK(q <= 10);  // n + 2 at most, so q(8) <= 10
    CHECK(p.census(q) >= 2);
    CHECK(p.census(q) <= 6);
    CHECK(p.density == cfg.density);
    if (i > 0) CHECK(p.seed != learnWorldParams(cfg, i - 1).seed);
  }
  CHECK(seen_k[1]);
  CHECK(seen_k[2]);
  CHECK(seen_k[3]);
}

TEST_CASE("a learn run over zero worlds succeeds with an empty report") {
  ExperimentConfig cfg = smallLearnConfig();
  cfg.worlds = 0;
  const RunReport rep = runLearn(cfg);
  CHECK(rep.records.empty());
  CHECK(rep.allPassed());
  CHECK(rep.command == "learn");
}

TEST_CASE("learn runs pass their claims and emit identical bytes") {
  const ExperimentConfig cfg = smallLearnConfig();
  const RunReport a = runLearn(cfg);
  REQUIRE(a.records.size() == 4);
  CHECK(a.allPassed());
  CHECK(a.records[0].id == "world-000");
  CHECK(a.records[3].id == "world-003");
  for (const RunRecord& r : a.records) {
    CHECK(r.counters.count("targets") == 1);
    CHECK(r.counters.count("passes") == 1);
    CHECK(r.counters.count("members") == 1);
    CHECK(r.counters.at("k") >= 1);
  }
  // Same config, same bytes; wall times never reach the serialization.
  const RunReport b = runLearn(cfg);
  CHECK(a.json() == b.json());
  CHECK(a.summaryText() == b.summaryText());
  // The worker count is an execution detail.
  ExperimentConfig parallel = cfg;
  parallel.jobs = 3;
  CHECK(runLearn(parallel).json() == a.json());
}

TEST_CASE("scenario files reload into the same worlds") {
  const fs::path dir = freshDir("scenarios");
  ExperimentConfig cfg = smallLearnConfig();
  cfg.worlds = 2;
  cfg.dump_scenarios = dir.string();
  const RunReport direct = runLearn(cfg);
  REQUIRE(fs::exists(dir / "world-000.json"));
  REQUIRE(fs::exists(dir / "world-001.json"));

  ExperimentConfig from_files = smallLearnConfig();
  from_files.scenario_files = {(dir / "world-000.json").string(),
                               (dir / "world-001.json").string()};
  const RunReport reloaded = runLearn(from_files);
  REQUIRE(reloaded.records.size() == 2);
  CHECK(reloaded.allPassed());
  CHECK(reloaded.records[0].id == from_files.scenario_files[0]);
  // The same worlds produce the same counters either way.
  CHECK(reloaded.records[0].counters == direct.records[0].counters);
  CHECK(reloaded.records[1].counters == direct.records[1].counters);

  // A corrupted scenario is rejected at load with a diagnostic.
  auto doc = nlohmann::json::parse(slurp(dir / "world-000.json"));
  for (const char* w : {"000", "001", "010", "011", "100", "101", "110", "111"})
    doc["sparse_set"].push_back(w);
  std::ofstream(dir / "world-000.json", std::ios::binary) << doc.dump();
  CHECK_THROWS_AS(runLearn(from_files), std::runtime_error);
}

TEST_CASE("transform runs batch instances and pass") {
  ExperimentConfig cfg;
  cfg.command = Command::Transform;
  cfg.seed = 42;
  cfg.formulas = 120;
  const RunReport rep = runTransform(cfg);
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.allPassed());
  CHECK(rep.records[0].id == "batch-00");
  CHECK(rep.records[0].counters.at("instances") == 100);
  CHECK(rep.records[1].counters.at("instances") == 20);
  CHECK(runTransform(cfg).json() == rep.json());
}

TEST_CASE("recover runs verify formulas against the exhaustive oracle") {
  ExperimentConfig cfg;
  cfg.command = Command::Recover;
  cfg.seed = 42;
  cfg.formulas = 3;
  cfg.vars = 2;
  const RunReport rep = runRecover(cfg);
  REQUIRE(rep.records.size() == 4);
  CHECK(rep.allPassed());
  CHECK(rep.records[0].id == "field-axioms");
  CHECK(rep.records[0].counters.at("gf4_pairs") == 16);
  CHECK(rep.records[1].id == "formula-000");
  CHECK(rep.records[1].counters.count("n") == 1);
  CHECK(rep.records[1].counters.count("m") == 1);
  CHECK(runRecover(cfg).json() == rep.json());
}

TEST_CASE("every fifth recover formula exercises the unsat contract") {
  ExperimentConfig cfg;
  cfg.command = Command::Recover;
  cfg.seed = 42;
  cfg.formulas = 5;
  cfg.vars = 2;
  cfg.include_unsat = true;
  const RunReport rep = runRecover(cfg);
  REQUIRE(rep.records.size() == 6);
  CHECK(rep.allPassed());
  const RunRecord& unsat = rep.records[5];
  CHECK(unsat.id == "formula-004");
  CHECK(unsat.counters.at("unsat") == 1);
  bool contract_seen = false;
  for (const CheckResult& c : unsat.checks)
    if (c.name == "unsat contract") contract_seen = c.passed;
  CHECK(contract_seen);
}

TEST_CASE("recover rejects formulas whose field degree is not allowed") {
  ExperimentConfig cfg;
  cfg.command = Command::Recover;
  cfg.seed = 42;
  cfg.formulas = 12;
  cfg.vars = 2;
  cfg.m_allowed = {2};  // two-variable formulas need m = 6
  try {
    runRecover(cfg);
    FAIL("expected a field-degree diagnostic");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("field degree") != std::string::npos);
  }
}

TEST_CASE("planted CNF generators honor their promises") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    for (int n = 1; n <= 6; ++n) {
      const CnfFormula unique = makeUniquelySatisfiableCnf(seed, n);
      CHECK(unique.numVars() == n);
      CHECK(allSatisfyingAssignments(unique).size() == 1);
      const CnfFormula unsat = makeUnsatisfiableCnf(seed, n);
      CHECK(unsat.numVars() == n);
      CHECK(allSatisfyingAssignments(unsat).empty());
    }
  }
  CHECK_THROWS_AS(makeUniquelySatisfiableCnf(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(makeUniquelySatisfiableCnf(1, 17), std::invalid_argument);
}

TEST_CASE("report formatting surfaces failed checks") {
  RunReport rep;
  rep.command = "learn";
  rep.seed = 7;
  rep.config["worlds"] = "2";
  RunRecord good;
  good.id = "world-000";
  good.checks.push_back({"A1.i cardinality", true, "12 checks"});
  RunRecord bad;
  bad.id = "world-007";
  bad.checks.push_back({"A1.iv antichain", false, "clause 1 -> 0 derives 1 -> 0|1"});
  rep.records = {good, bad};

  CHECK(!rep.allPassed());
  const auto fails = rep.failures();
  REQUIRE(fails.size() == 1);
  CHECK(fails[0] == "A1.iv antichain @ world-007: clause 1 -> 0 derives 1 -> 0|1");
  const std::string text = rep.summaryText();
  CHECK(text.find("world-000  PASS  (1/1 checks)") != std::string::npos);
  CHECK(text.find("world-007  FAIL  (0/1 checks)") != std::string::npos);
  CHECK(text.find("A1.iv antichain") != std::string::npos);
  CHECK(text.find("CHECK FAILURES PRESENT") != std::string::npos);

  const auto doc = nlohmann::json::parse(rep.json());
  CHECK(doc.at("command") == "learn");
  CHECK(doc.at("summary").at("failures") == 1);
  CHECK(doc.at("summary").at("checks") == 2);

  rep.records = {good};
  CHECK(rep.allPassed());
  CHECK(rep.summaryText().find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("emitted report files are byte-stable") {
  ExperimentConfig cfg = smallLearnConfig();
  cfg.worlds = 1;
  const RunReport rep = runLearn(cfg);

  const fs::path d1 = freshDir("emit1");
  const fs::path d2 = freshDir("emit2");
  emitReport(rep, d1.string());
  emitReport(rep, d2.string());
  CHECK(slurp(d1 / "report.json") == slurp(d2 / "report.json"));
  CHECK(slurp(d1 / "summary.txt") == slurp(d2 / "summary.txt"));
  CHECK(slurp(d1 / "report.json") == rep.json());
  CHECK(nlohmann::json::parse(slurp(d1 / "report.json")).at("seed") == 42);
  CHECK_THROWS_AS(emitReport(rep, "/proc/version/nope"), std::runtime_error);
}

TEST_CASE("run dispatches on the configured command") {
  ExperimentConfig cfg = smallLearnConfig();
  cfg.worlds = 1;
  const fs::path dir = freshDir("dispatch");
  cfg.out_dir = dir.string();
  const RunReport rep = run(cfg);
  CHECK(rep.command == "learn");
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "summary.txt"));
}
