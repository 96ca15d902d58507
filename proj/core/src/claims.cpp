#include "antihorn/claims.hpp"

#include <algorithm>

#include "antihorn/poly.hpp"

namespace antihorn {

namespace {

std::string passTag(const LearnState& st) {
  return "pass " + std::to_string(st.pass_count) + " (z = " + st.z.str() + ")";
}

}  // namespace

std::optional<std::string> violatesA1Cardinality(const LearnState& st, const SparseWorld& world) {
  const std::uint64_t cap = gammaCapacity(st.n, world);
  if (st.gamma.size() < 1 || st.gamma.size() > cap)
    return "|gamma| = " + std::to_string(st.gamma.size()) + " outside [1, " + std::to_string(cap) +
           "] at " + passTag(st);
  return std::nullopt;
}

std::optional<std::string> violatesA1WordLength(const LearnState& st, const SparseWorld& world) {
  const std::uint64_t q = world.bound()(static_cast<std::uint64_t>(st.n));
  const std::uint64_t limit = std::max<std::uint64_t>(q, static_cast<std::uint64_t>(st.z.size()));
  for (const AntiHornClause& c : st.gamma) {
    if (static_cast<std::uint64_t>(c.lhs().size()) > limit)
      return "word \"" + c.lhs().str() + "\" longer than max(q(n), |z|) at " + passTag(st);
    for (const Word& w : c.rhs())
      if (static_cast<std::uint64_t>(w.size()) > limit)
        return "word \"" + w.str() + "\" longer than max(q(n), |z|) at " + passTag(st);
  }
  return std::nullopt;
}

std::optional<std::string> violatesA1Lhs(const LearnState& st, const SparseWorld&) {
  for (const AntiHornClause& c : st.gamma)
    if (c.lhs() != st.z)
      return "clause \"" + c.str() + "\" has left-hand side != z at " + passTag(st);
  return std::nullopt;
}

std::optional<std::string> violatesA1Antichain(const LearnState& st, const SparseWorld&) {
  const auto clauses = st.gamma.clauses();
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (std::size_t j = 0; j < clauses.size(); ++j)
      if (i != j && derives(clauses[i], clauses[j]))
        return "\"" + clauses[i].str() + "\" derives \"" + clauses[j].str() + "\" at " + passTag(st);
  return std::nullopt;
}

std::optional<std::string> violatesPackingChoice(const PackingChoice& choice, const Word& z,
                                                 const WordSet& s) {
  if (choice.alpha.lhs() != z || choice.beta.lhs() != z || choice.gamma.lhs() != z)
    return "packing choice leaves the left-hand side z";
  if (!satisfied(choice.alpha, s))
    return "alpha \"" + choice.alpha.str() + "\" not satisfied by the sparse set";
  if (choice.beta == choice.gamma)
    return "beta and gamma are the same clause \"" + choice.beta.str() + "\"";
  if (!derives(choice.alpha, choice.beta) || !derives(choice.alpha, choice.gamma))
    return "alpha \"" + choice.alpha.str() + "\" fails to derive beta or gamma";
  return std::nullopt;
}

std::optional<std::string> violatesWeightTrace(const LearnState& st, const SparseWorld& world) {
  const std::uint64_t top = learnSatPassBound(st.n, world);  // also the max weight
  for (std::size_t i = 0; i < st.weight_trace.size(); ++i) {
    if (st.weight_trace[i] > top)
      return "w(gamma) = " + std::to_string(st.weight_trace[i]) + " above " + std::to_string(top) +
             " after pass " + std::to_string(i);
    if (i > 0 && st.weight_trace[i] <= st.weight_trace[i - 1])
      return "w(gamma) did not increase across pass " + std::to_string(i) + " (" +
             std::to_string(st.weight_trace[i - 1]) + " -> " + std::to_string(st.weight_trace[i]) +
             ")";
  }
  return std::nullopt;
}

std::optional<std::string> violatesPassBound(const LearnState& st, const SparseWorld& world) {
  const std::uint64_t bound = learnSatPassBound(st.n, world);
  if (st.pass_count > bound)
    return std::to_string(st.pass_count) + " passes, bound " + std::to_string(bound);
  return std::nullopt;
}

std::optional<std::string> violatesOutputLhs(const AntiHornFormula& out, const Word& z) {
  for (const AntiHornClause& c : out)
    if (c.lhs() != z) return "output clause \"" + c.str() + "\" has left-hand side != z";
  return std::nullopt;
}

std::optional<std::string> violatesOutputSatisfied(const AntiHornFormula& out,
                                                   const SparseWorld& world) {
  if (!satisfied(out, world.sparseSet())) return std::string("output not satisfied by the sparse set");
  return std::nullopt;
}

std::optional<std::string> violatesOutputCoverage(const AntiHornFormula& out,
                                                  const TargetLanguage& target, int n) {
  const std::uint64_t total = Word::countUpToLength(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Word x = Word::fromRank(r);
    if (target.contains(x) && !derives(out, target.world().reduction(x)))
      return "member \"" + x.str() + "\" not covered by the output";
  }
  return std::nullopt;
}

std::optional<std::string> violatesB1Pass(const LearnAllPass& pass, const SparseWorld& world) {
  const std::uint64_t q = world.bound()(static_cast<std::uint64_t>(pass.level));
  const std::uint64_t bound = world.census()(q);  // p(q(i))
  if (pass.index > bound)
    return "level " + std::to_string(pass.level) + " ran " + std::to_string(pass.index) +
           " passes, bound " + std::to_string(bound);
  for (const Word& v : pass.lhs_added) {
    if (!world.sparseSet().contains(v)) continue;
    if (static_cast<std::uint64_t>(v.size()) > q) continue;
    if (std::find(pass.lhs_before.begin(), pass.lhs_before.end(), v) == pass.lhs_before.end())
      return std::nullopt;  // found the fresh sparse-set word this pass must add
  }
  return "level " + std::to_string(pass.level) + " pass " + std::to_string(pass.index) +
         " added no new sparse-set left-hand word";
}

std::optional<std::string> violatesB2(const FormulaList& list, const TargetLanguage& target) {
  const std::uint64_t total = Word::countUpToLength(list.horizon);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Word x = Word::fromRank(r);
    if (forecast(x, list, target.world()) != target.contains(x))
      return "forecast disagrees with membership on \"" + x.str() + "\"";
  }
  return std::nullopt;
}

}  // namespace antihorn
