#pragma once

#include <optional>
#include <string>

#include "antihorn/learner.hpp"
#include "antihorn/world.hpp"

namespace antihorn {

// Predicates for the learner's documented invariants.  Each returns
// nullopt when the invariant holds and a human-readable description of the
// first violation otherwise, so callers can fold them into named report
// checks (A1.i .. B2) or assert them directly in tests.

// A1.i: 1 <= |gamma| <= p(q(n))^(k+1).
std::optional<std::string> violatesA1Cardinality(const LearnState& st, const SparseWorld& world);

// A1.ii: every word in gamma has length <= max(q(n), |z|).
std::optional<std::string> violatesA1WordLength(const LearnState& st, const SparseWorld& world);

// A1.iii: every clause of gamma carries the left-hand side z.
std::optional<std::string> violatesA1Lhs(const LearnState& st, const SparseWorld& world);

// A1.iv: gamma is an antichain under derivation.
std::optional<std::string> violatesA1Antichain(const LearnState& st, const SparseWorld& world);

// A2: the packing choice has lhs z throughout, alpha satisfied by S,
// beta != gamma, and alpha derives both.
std::optional<std::string> violatesPackingChoice(const PackingChoice& choice, const Word& z,
                                                 const WordSet& s);

// A3 (weight): w(gamma) strictly increases across the trace and never
// exceeds (p(q(n))^(k+1)+1)^k.
std::optional<std::string> violatesWeightTrace(const LearnState& st, const SparseWorld& world);

// A3 (termination): the pass count stays within the pass bound.
std::optional<std::string> violatesPassBound(const LearnState& st, const SparseWorld& world);

// Output properties of a finished run (Claim A): lhs z everywhere,
// satisfied by S, and the reduction of every member of length <= n derived
// (verified by exhaustive scan).
std::optional<std::string> violatesOutputLhs(const AntiHornFormula& out, const Word& z);
std::optional<std::string> violatesOutputSatisfied(const AntiHornFormula& out,
                                                   const SparseWorld& world);
std::optional<std::string> violatesOutputCoverage(const AntiHornFormula& out,
                                                  const TargetLanguage& target, int n);

// B1: the pass index stays within p(q(i)) and the pass introduced a
// left-hand word from the sparse set, of length <= q(i), new to the list.
std::optional<std::string> violatesB1Pass(const LearnAllPass& pass, const SparseWorld& world);

// B2: forecast(x) agrees with membership for every |x| <= horizon.
std::optional<std::string> violatesB2(const FormulaList& list, const TargetLanguage& target);

}  // namespace antihorn
