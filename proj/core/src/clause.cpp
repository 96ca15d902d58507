#include "antihorn/clause.hpp"

#include <algorithm>
#include <stdexcept>

namespace antihorn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

AntiHornClause::AntiHornClause(Word lhs, std::vector<Word> rhs)
    : lhs_(lhs), rhs_(std::move(rhs)) {
  std::sort(rhs_.begin(), rhs_.end());
  rhs_.erase(std::unique(rhs_.begin(), rhs_.end()), rhs_.end());
}

bool AntiHornClause::rhsContains(const Word& w) const {
  return std::binary_search(rhs_.begin(), rhs_.end(), w);
}

std::string AntiHornClause::str() const {
  std::string out = lhs_.str() + " ->";
  for (std::size_t i = 0; i < rhs_.size(); ++i) {
    out += (i == 0) ? " " : "|";
    out += rhs_[i].str();
  }
  return out;
}

AntiHornClause AntiHornClause::parse(std::string_view text) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos)
    throw std::invalid_argument("AntiHornClause::parse: missing \"->\" in \"" + std::string(text) + "\"");
  const Word lhs = Word::parse(trim(text.substr(0, arrow)));
  std::string_view rest = trim(text.substr(arrow + 2));
  std::vector<Word> rhs;
  while (!rest.empty()) {
    const auto bar = rest.find('|');
    rhs.push_back(Word::parse(trim(rest.substr(0, bar))));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  return AntiHornClause(lhs, std::move(rhs));
}

bool derives(const AntiHornClause& gamma, const AntiHornClause& delta) {
  if (gamma.lhs() != delta.lhs()) return true;
  return std::includes(delta.rhs().begin(), delta.rhs().end(),
                       gamma.rhs().begin(), gamma.rhs().end());
}

bool satisfied(const AntiHornClause& clause, const WordSet& s) {
  if (!s.contains(clause.lhs())) return true;
  for (const Word& w : clause.rhs())
    if (s.contains(w)) return true;
  return false;
}

AntiHornFormula::AntiHornFormula(std::vector<AntiHornClause> clauses)
    : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

std::string AntiHornFormula::str() const {
  std::string out;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) out += " ; ";
    out += clauses_[i].str();
  }
  return out;
}

AntiHornFormula AntiHornFormula::parse(std::string_view text) {
  std::vector<AntiHornClause> clauses;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const auto sep = rest.find(';');
    const std::string_view piece = trim(rest.substr(0, sep));
    if (!piece.empty()) clauses.push_back(AntiHornClause::parse(piece));
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + 1);
  }
  return AntiHornFormula(std::move(clauses));
}

bool anyDerives(const AntiHornFormula& gamma, const AntiHornClause& delta) {
  for (const AntiHornClause& g : gamma)
    if (derives(g, delta)) return true;
  return false;
}

bool derives(const AntiHornFormula& gamma, const AntiHornFormula& delta) {
  for (const AntiHornClause& d : delta)
    if (!anyDerives(gamma, d)) return false;
  return true;
}

bool satisfied(const AntiHornFormula& formula, const WordSet& s) {
  for (const AntiHornClause& c : formula)
    if (!satisfied(c, s)) return false;
  return true;
}

std::vector<Word> lhsWords(const AntiHornFormula& formula) {
  std::vector<Word> out;
  out.reserve(formula.size());
  for (const AntiHornClause& c : formula) out.push_back(c.lhs());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t maxRhsSize(const AntiHornFormula& formula) {
  std::size_t m = 0;
  for (const AntiHornClause& c : formula) m = std::max(m, c.rhsSize());
  return m;
}

}  // namespace antihorn
