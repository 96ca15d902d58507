#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace antihorn {

// One named invariant verdict.  `detail` carries either a short tally
// ("142 passes checked") or the first observed violation.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Folds many observations into one named verdict, keeping the first failure.
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string name) { result_.name = std::move(name); }

  void fold(const std::string& failure) {
    ++count_;
    if (result_.passed && !failure.empty()) {
      result_.passed = false;
      result_.detail = failure;
    }
  }
  void foldOk() { fold({}); }

  std::uint64_t count() const { return count_; }
  CheckResult result() const {
    CheckResult r = result_;
    if (r.passed) r.detail = std::to_string(count_) + " checks";
    return r;
  }

 private:
  CheckResult result_;
  std::uint64_t count_ = 0;
};

// Outcome of one experimental unit (a world, a formula, a criterion).
struct RunRecord {
  std::string id;
  std::vector<CheckResult> checks;
  std::map<std::string, std::uint64_t> counters;
  double wall_ms = 0.0;  // console display only; never serialized

  bool passed() const;
};

// The full outcome of a command.  Serialization is a pure function of the
// content, so identical (config, seed) inputs emit identical bytes; wall
// times deliberately stay out of both files.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;  // echoed configuration
  std::vector<RunRecord> records;

  bool allPassed() const;
  std::vector<std::string> failures() const;  // "check @ record: detail"

  std::string json() const;         // machine-readable report
  std::string summaryText() const;  // human-readable summary
};

// Writes report.json and summary.txt under out_dir (created if missing).
// I/O failures are reported with the offending path.
void emitReport(const RunReport& report, const std::string& out_dir);

}  // namespace antihorn
