#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace antihorn {

// Propositional CNF over variables 1..num_vars, clauses as DIMACS-style
// literal lists (positive int = variable, negative = its negation).
class CnfFormula {
 public:
  CnfFormula(int num_vars, std::vector<std::vector<int>> clauses);

  int numVars() const { return num_vars_; }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }

  // Assignment packed little-endian: bit (v-1) of mask is variable v.
  bool eval(std::uint64_t mask) const;

  // Variable count plus total literal occurrences.
  std::uint64_t sizeMeasure() const;

  // Stable content hash; equal formulas hash equal across runs.
  std::uint64_t hashValue() const;

  std::string toDimacs() const;
  static CnfFormula parseDimacs(const std::string& text);

  bool operator==(const CnfFormula&) const = default;

 private:
  int num_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
};

// All satisfying assignments of phi in increasing mask order.  Intended for
// small variable counts only; throws std::invalid_argument past 20 variables.
std::vector<std::uint64_t> allSatisfyingAssignments(const CnfFormula& phi);

}  // namespace antihorn
