#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antihorn/word.hpp"

namespace antihorn {

// An anti-Horn clause  v0 -> v1 | v2 | ... | vm : one word on the left,
// a set of words on the right.  The right-hand side is kept sorted and
// duplicate-free, so equal clauses compare equal.  Text form:
//   "lhs -> w1|w2|...|wm"     with "_" for the empty word,
//   "lhs ->"                  when the right-hand side is empty.
class AntiHornClause {
 public:
  AntiHornClause() = default;  // (_ ->)
  AntiHornClause(Word lhs, std::vector<Word> rhs);

  const Word& lhs() const { return lhs_; }
  std::span<const Word> rhs() const { return rhs_; }
  std::size_t rhsSize() const { return rhs_.size(); }
  bool rhsContains(const Word& w) const;

  std::string str() const;
  static AntiHornClause parse(std::string_view text);

  friend auto operator<=>(const AntiHornClause&, const AntiHornClause&) = default;

 private:
  Word lhs_;
  std::vector<Word> rhs_;
};

// gamma derives delta: the left-hand sides differ, or rhs(gamma) is a
// subset of rhs(delta).  Anything a model grants delta, gamma grants too.
bool derives(const AntiHornClause& gamma, const AntiHornClause& delta);

// Satisfaction by a finite set S: lhs outside S, or some rhs word inside.
bool satisfied(const AntiHornClause& clause, const WordSet& s);

// A finite set of anti-Horn clauses (sorted, duplicate-free).
class AntiHornFormula {
 public:
  AntiHornFormula() = default;
  explicit AntiHornFormula(std::vector<AntiHornClause> clauses);

  std::span<const AntiHornClause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  std::string str() const;  // clauses joined by " ; "
  static AntiHornFormula parse(std::string_view text);

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  friend bool operator==(const AntiHornFormula&, const AntiHornFormula&) = default;

 private:
  std::vector<AntiHornClause> clauses_;
};

// Gamma derives Delta: every clause of Delta is derived by some clause of Gamma.
bool derives(const AntiHornFormula& gamma, const AntiHornFormula& delta);

// True when some clause of gamma derives delta.
bool anyDerives(const AntiHornFormula& gamma, const AntiHornClause& delta);

// Every clause satisfied.  The empty formula is satisfied by every set.
bool satisfied(const AntiHornFormula& formula, const WordSet& s);

// Distinct left-hand words of a formula, in length-lex order.
std::vector<Word> lhsWords(const AntiHornFormula& formula);

// Largest right-hand-side cardinality, 0 for the empty formula.
std::size_t maxRhsSize(const AntiHornFormula& formula);

}  // namespace antihorn
