#include "antihorn/report.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace antihorn {

bool RunRecord::passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

bool RunReport::allPassed() const {
  for (const RunRecord& r : records)
    if (!r.passed()) return false;
  return true;
}

std::vector<std::string> RunReport::failures() const {
  std::vector<std::string> out;
  for (const RunRecord& r : records)
    for (const CheckResult& c : r.checks)
      if (!c.passed) out.push_back(c.name + " @ " + r.id + ": " + c.detail);
  return out;
}

std::string RunReport::json() const {
  nlohmann::json j;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  nlohmann::json recs = nlohmann::json::array();
  for (const RunRecord& r : records) {
    nlohmann::json jr;
    jr["id"] = r.id;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    jr["checks"] = std::move(checks);
    jr["counters"] = r.counters;
    recs.push_back(std::move(jr));
  }
  j["records"] = std::move(recs);
  std::size_t failed = 0, total = 0;
  for (const RunRecord& r : records)
    for (const CheckResult& c : r.checks) {
      ++total;
      if (!c.passed) ++failed;
    }
  j["summary"] = {{"records", records.size()},
                  {"checks", total},
                  {"failures", failed},
                  {"failed", failures()}};
  return j.dump(2) + "\n";
}

std::string RunReport::summaryText() const {
  std::string out = command + " report (seed " + std::to_string(seed) + ")\n";
  for (const auto& [key, value] : config) out += "  " + key + " = " + value + "\n";
  out += "\n";
  for (const RunRecord& r : records) {
    std::size_t ok = 0;
    for (const CheckResult& c : r.checks) ok += c.passed ? 1u : 0u;
    out += r.id + "  " + (r.passed() ? "PASS" : "FAIL") + "  (" + std::to_string(ok) + "/" +
           std::to_string(r.checks.size()) + " checks)\n";
  }
  const auto fails = failures();
  if (!fails.empty()) {
    out += "\nfailed checks:\n";
    for (const std::string& f : fails) out += "  " + f + "\n";
  }
  out += "\n" + std::string(allPassed() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") + "\n";
  return out;
}

void emitReport(const RunReport& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + out_dir + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& content) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed for " + path.string());
  };
  write("report.json", report.json());
  write("summary.txt", report.summaryText());
}

}  // namespace antihorn
