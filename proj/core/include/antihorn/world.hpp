#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antihorn/clause.hpp"
#include "antihorn/poly.hpp"
#include "antihorn/word.hpp"

namespace antihorn {

// Desk-scale caps.  Exhaustive scans enumerate all words up to n_max, so
// n_max = 12 already means 8191 formula evaluations per scan.
inline constexpr int kMaxHorizon = 12;

struct WorldParams {
  std::uint64_t seed = 1;
  int k = 1;            // right-hand-side cap of every reduction clause
  int n_max = 4;        // longest input word the world answers for
  Poly census;          // p: census bound on the sparse set
  Poly bound;           // q: clause-count and word-length bound per input
  Rational density;     // how full the census budget is drawn

  friend bool operator==(const WorldParams&, const WorldParams&) = default;
};

// A self-contained experiment world: an explicit sparse set S whose census
// respects p, and a deterministic reduction x -> Phi_x with at most q(|x|)
// clauses over words no longer than q(|x|).  The target language is
//   x in T  <=>  Phi_x is satisfied by S.
// Everything is a pure function of (seed, params), so worlds regenerate
// identically from their scenario files.
class SparseWorld {
 public:
  static SparseWorld generate(const WorldParams& params);

  // Builds a world around an explicit sparse set and reduction table
  // (indexed by word rank, covering every |x| <= n_max).  Validates the
  // same invariants generation guarantees.
  static SparseWorld fromParts(const WorldParams& params, WordSet s,
                               std::vector<AntiHornFormula> table);

  const AntiHornFormula& reduction(const Word& x) const;  // |x| <= n_max

  const WordSet& sparseSet() const { return s_; }
  const WorldParams& params() const { return params_; }
  int k() const { return params_.k; }
  int nMax() const { return params_.n_max; }
  const Poly& census() const { return params_.census; }
  const Poly& bound() const { return params_.bound; }
  std::uint64_t seed() const { return params_.seed; }

  // Longest word the sparse set may contain: q(n_max).
  int sparseLengthCap() const;

  // Scenario file round trip.  save() keeps the generator form when the
  // table was generated and writes the full table when it was explicit;
  // load(save(w)) == w either way.  load() revalidates every invariant,
  // so hand-edited files that break the census or clause bounds are
  // rejected with a diagnostic.
  std::string save() const;
  static SparseWorld load(std::string_view text);

  friend bool operator==(const SparseWorld&, const SparseWorld&) = default;

 private:
  SparseWorld() = default;
  void validate() const;

  WorldParams params_;
  WordSet s_;
  std::vector<AntiHornFormula> table_;  // indexed by Word::rank
  bool explicit_table_ = false;
};

// Membership oracle over a world.  The characteristic vector is fixed at
// construction; contains() must agree with evaluating the definition
// directly (the unit tests guard that).
class TargetLanguage {
 public:
  explicit TargetLanguage(const SparseWorld& world);

  bool contains(const Word& x) const;  // |x| <= n_max
  const SparseWorld& world() const { return *world_; }

 private:
  const SparseWorld* world_;
  std::vector<bool> members_;
};

// Length-lex smallest member x with |x| <= n whose reduction gamma fails
// to derive; nullopt when gamma covers every member.
std::optional<Word> smallestCounterexampleA(const TargetLanguage& target, int n,
                                            const AntiHornFormula& gamma);

// Length-lex smallest non-member x with |x| <= n whose reduction every
// formula on the list derives; nullopt when none is left.
std::optional<Word> smallestCounterexampleB(const TargetLanguage& target, int n,
                                            std::span<const AntiHornFormula> list);

}  // namespace antihorn
