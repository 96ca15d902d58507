#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antihorn/clause.hpp"
#include "antihorn/world.hpp"

namespace antihorn {

// --- weights ---------------------------------------------------------------
//
// Clauses with fewer right-hand words weigh exponentially more:
//   w(c) = (p(q(n))^(k+1) + 1) ^ (k - |rhs(c)|).
// Every learner pass strictly increases the total weight of its working
// set, which is what bounds the pass count.

std::uint64_t clauseWeight(const AntiHornClause& c, int n, const SparseWorld& world);
std::uint64_t formulaWeight(const AntiHornFormula& f, int n, const SparseWorld& world);

// Working-set capacity p(q(n))^(k+1) and the pass bound (capacity+1)^k.
std::uint64_t gammaCapacity(int n, const SparseWorld& world);
std::uint64_t learnSatPassBound(int n, const SparseWorld& world);

// --- single-target learner ---------------------------------------------------

// Observable learner state.  Invariants maintained at the end of every pass
// (checked by the claim suite, see claims.hpp):
//   A1.i    1 <= |gamma| <= p(q(n))^(k+1)
//   A1.ii   every word in gamma has length <= max(q(n), |z|)
//   A1.iii  every clause of gamma has left-hand side z
//   A1.iv   gamma is an antichain under derivation
struct LearnState {
  AntiHornFormula gamma;
  Word z;
  int n = 0;
  std::uint64_t pass_count = 0;
  // w(gamma) before the first pass and after each completed pass.
  std::vector<std::uint64_t> weight_trace;
};

// Result of the packing subprogram: alpha is satisfied by S, shares the
// left-hand side z, and derives the two distinct clauses beta and gamma
// from the working set.
struct PackingChoice {
  AntiHornClause alpha;
  AntiHornClause beta;
  AntiHornClause gamma;
};

// Runs when the working set is exactly full (|gamma| = p(q(n))^(k+1)) and
// satisfied by S; both are preconditions.  Deterministic tie-breaks:
// the highest-frequency word is the length-lex smallest among ties, and
// beta/gamma are the two length-lex smallest distinct clauses of the final
// cluster.
PackingChoice packingChoose(const LearnState& state, const SparseWorld& world);

// Per-pass trace record: enough to replay a run externally.
struct LearnTrace {
  enum class Action { Extend, Pack };
  struct Pass {
    std::uint64_t index = 0;       // 1-based
    std::size_t gamma_size = 0;    // |gamma| at the end of the pass
    std::uint64_t weight = 0;      // w(gamma) at the end of the pass
    Action action = Action::Extend;
    AntiHornClause chosen;         // the adopted clause (delta, or alpha when packed)
  };
  std::vector<Pass> passes;
  std::string text() const;  // one line per pass
};

struct LearnOptions {
  // Called once after initialization and after every completed pass.
  std::function<void(const LearnState&)> on_pass;
  // Called at every packing invocation with the subprogram's choice.
  std::function<void(const PackingChoice&, const LearnState&)> on_pack;
  LearnTrace* trace = nullptr;
};

// Learns a working set for left-hand word z against the target oracle:
// repeatedly adopts an underived clause from the reduction of the smallest
// uncovered member, packing the set down whenever it fills up.  Returns a
// formula gamma* with lhs z, satisfied by S, deriving the reduction of
// every member of length <= n.  Throws std::logic_error if the internal
// pass bound is ever exhausted (theoretically unreachable).
AntiHornFormula learnSat(const SparseWorld& world, const TargetLanguage& target, int n,
                         const Word& z, const LearnOptions& opts = {});

// --- list learner ------------------------------------------------------------

// Output of learnAll: forecasts membership for words up to the horizon.
struct FormulaList {
  std::vector<AntiHornFormula> formulas;
  int horizon = 0;
};

// One pass of the list learner's inner loop at level i: the counterexample
// it covered, the left-hand words added, and those already on the list.
struct LearnAllPass {
  int level = 0;
  std::uint64_t index = 0;  // 1-based within the level
  Word counterexample;
  std::span<const Word> lhs_added;
  std::span<const Word> lhs_before;
};

struct LearnAllOptions {
  std::function<void(const LearnAllPass&)> on_pass;
  std::function<void(int level, const FormulaList&)> on_level;
  LearnOptions inner;  // forwarded to every learnSat call
};

// Builds the forecast list level by level: while some non-member of length
// <= i slips through every formula on the list, learn a working set for
// each left-hand word of its reduction (length-lex order).  Each level
// admits at most p(q(i)) passes; exceeding that bound is an internal
// inconsistency and throws std::logic_error.
FormulaList learnAll(const SparseWorld& world, const TargetLanguage& target, int n,
                     const LearnAllOptions& opts = {});

// Membership forecast: x is predicted inside the target iff every formula
// on the list derives its reduction.  |x| must not exceed the horizon.
bool forecast(const Word& x, const FormulaList& list, const SparseWorld& world);

// Forecasts for a whole query batch, in order.
std::vector<bool> answerQueries(std::span<const Word> queries, const FormulaList& list,
                                const SparseWorld& world);

}  // namespace antihorn
