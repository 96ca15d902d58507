#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antihorn/dimacs.hpp"
#include "antihorn/gf2m.hpp"
#include "antihorn/poly.hpp"
#include "antihorn/word.hpp"

namespace antihorn {

// Decides whether the tuple <phi, 1^m, u, v> belongs to the language, i.e.
// whether some satisfying assignment a of phi has sum a_i u^i = v.
using MembershipFn = std::function<bool(const FieldCtx&, FieldElement u, FieldElement v)>;

// Black-box disjunctive reduction: maps <phi, 1^m, u, v> to a finite word set
// (phi and m are fixed per instance; m is read off the context).
using ReductionFn = std::function<std::vector<Word>(const FieldCtx&, FieldElement u, FieldElement v)>;

// One unique-assignment extraction problem: a formula promised to have
// exactly one satisfying assignment, a reduction to a sparse set, and the
// bivariate bounds (in formula size n' and field degree m) the reduction's
// world obeys.
struct RecoveryInstance {
  CnfFormula phi;
  std::uint64_t n_prime = 0;  // size measure of phi
  ReductionFn reduction;
  WordSet sparse_set;
  Poly2 census_bound;  // |S restricted to length <= q(n',m)| <= p(n',m)
  Poly2 length_bound;  // reduction output word lengths <= q(n',m)
};

class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No candidate word produced a verified assignment: the uniqueness promise or
// the reduction itself is at fault.
class NoAssignmentFound : public RecoveryError {
 public:
  using RecoveryError::RecoveryError;
};

// Every candidate solved to coefficients outside {0,1} (same root cause).
class FieldValueNotBoolean : public RecoveryError {
 public:
  using RecoveryError::RecoveryError;
};

// Smallest m = 2*3^l with 2^m / p(n_prime, m) >= n.
int chooseM(std::uint64_t n, std::uint64_t n_prime, const Poly2& p);

// Support lists keyed by emitted word; pairs appear in sweep order
// (u ascending, v ascending within u), so the smallest v for each u is the
// first pair carrying that u.
using SupportMap = std::map<Word, std::vector<std::pair<FieldElement, FieldElement>>>;

// Number of distinct u's in a support list (multiple v under one u count once).
std::size_t distinctUCount(const std::vector<std::pair<FieldElement, FieldElement>>& pairs);

// Full sweep over all (u, v) in the field; jobs > 1 stripes the u range
// across threads and merges in u order, so the result is independent of jobs.
SupportMap collectCandidateWords(const RecoveryInstance& inst, const FieldCtx& ctx, int jobs = 1);

// The whole pipeline: choose m, sweep, pigeonhole candidates, solve the
// Vandermonde system per candidate, and return the first assignment that
// satisfies phi.  Returned bits are indexed by variable (bit i = variable i+1).
std::vector<std::uint8_t> recoverAssignment(const RecoveryInstance& inst, int jobs = 1);

// Membership of <phi, 1^m, u, v> by enumerating all assignments of phi.
MembershipFn bruteForceMembership(const CnfFormula& phi);

// A deterministic stand-in for the hypothesized reduction: member tuples emit
// a designated sparse word s* (a function of seed, phi, and m only) plus a
// hash-fresh decoy; non-member tuples emit only the decoy.  Decoys are drawn
// outside s at lengths within the length bound.
ReductionFn harnessReduction(std::uint64_t seed, WordSet s, const CnfFormula& phi, Poly2 length_bound,
                             MembershipFn member);

}  // namespace antihorn
