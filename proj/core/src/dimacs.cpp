#include "antihorn/dimacs.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "hashing.hpp"

namespace antihorn {

CnfFormula::CnfFormula(int num_vars, std::vector<std::vector<int>> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 1 || num_vars_ > 62)
    throw std::invalid_argument("cnf: variable count must be in [1, 62]");
  for (const auto& clause : clauses_)
    for (int lit : clause) {
      if (lit == 0) throw std::invalid_argument("cnf: literal 0 is reserved as the clause terminator");
      if (std::abs(lit) > num_vars_)
        throw std::invalid_argument("cnf: literal " + std::to_string(lit) + " names an undeclared variable");
    }
}

bool CnfFormula::eval(std::uint64_t mask) const {
  for (const auto& clause : clauses_) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = (mask >> (std::abs(lit) - 1)) & 1u;
      if (value == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::uint64_t CnfFormula::sizeMeasure() const {
  std::uint64_t total = static_cast<std::uint64_t>(num_vars_);
  for (const auto& clause : clauses_) total += clause.size();
  return total;
}

std::uint64_t CnfFormula::hashValue() const {
  std::uint64_t h = detail::mix({0x636e66u, static_cast<std::uint64_t>(num_vars_)});
  for (const auto& clause : clauses_) {
    h = detail::mix({h, 0x636c61757365u, clause.size()});
    for (int lit : clause) h = detail::mix({h, static_cast<std::uint64_t>(static_cast<std::int64_t>(lit))});
  }
  return h;
}

std::string CnfFormula::toDimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars_ << ' ' << clauses_.size() << '\n';
  for (const auto& clause : clauses_) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula CnfFormula::parseDimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int num_vars = -1;
  std::size_t num_clauses = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    if (!header_seen) {
      std::string p, fmt;
      if (!(fields >> p >> fmt >> num_vars >> num_clauses) || p != "p" || fmt != "cnf")
        throw std::invalid_argument("dimacs: expected 'p cnf <vars> <clauses>' header");
      header_seen = true;
      continue;
    }
    int lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!header_seen) throw std::invalid_argument("dimacs: missing header");
  if (!current.empty()) throw std::invalid_argument("dimacs: final clause lacks its 0 terminator");
  if (clauses.size() != num_clauses)
    throw std::invalid_argument("dimacs: header declares " + std::to_string(num_clauses) + " clauses, found " +
                                std::to_string(clauses.size()));
  return CnfFormula(num_vars, std::move(clauses));
}

std::vector<std::uint64_t> allSatisfyingAssignments(const CnfFormula& phi) {
  if (phi.numVars() > 20)
    throw std::invalid_argument("allSatisfyingAssignments: exhaustive sweep limited to 20 variables");
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << phi.numVars();
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (phi.eval(mask)) out.push_back(mask);
  return out;
}

}  // namespace antihorn
