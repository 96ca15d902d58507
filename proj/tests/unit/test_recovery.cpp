#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "antihorn/dimacs.hpp"
#include "antihorn/gf2m.hpp"
#include "antihorn/poly.hpp"
#include "antihorn/recovery.hpp"
#include "antihorn/word.hpp"

using namespace antihorn;

namespace {

WordSet shortSparseSet() {
  return WordSet({Word::parse("0"), Word::parse("10"), Word::parse("110")});
}

RecoveryInstance harnessInstance(const CnfFormula& phi, std::uint64_t seed,
                                 std::uint64_t census, WordSet s) {
  const Poly2 length = Poly2::constant(60);
  return RecoveryInstance{phi,
                          phi.sizeMeasure(),
                          harnessReduction(seed, s, phi, length,
                                           bruteForceMembership(phi)),
                          s,
                          Poly2::constant(census),
                          length};
}

}  // namespace

TEST_CASE("choosing the field degree") {
  CHECK(chooseM(8, 10, Poly2::constant(4)) == 6);
  CHECK(chooseM(1, 5, Poly2::constant(2)) == 2);
  CHECK(chooseM(2, 4, Poly2::constant(2)) == 2);   // 2^2 = 2 * 2 exactly
  CHECK(chooseM(1, 1, Poly2().set(0, 3, 1)) == 18);  // p = m^3 outgrows 2,6
  CHECK_THROWS_AS(chooseM(0, 1, Poly2::constant(2)), std::invalid_argument);
  CHECK_THROWS_AS(chooseM(2, 1, Poly2::constant(std::uint64_t{1} << 63)),
                  std::logic_error);
}

TEST_CASE("distinct-u counting collapses repeated evaluation points") {
  const FieldCtx f = FieldCtx::build(2);
  std::vector<std::pair<FieldElement, FieldElement>> pairs = {
      {f.element(1), f.element(0)},
      {f.element(1), f.element(2)},
      {f.element(3), f.element(0)}};
  CHECK(distinctUCount(pairs) == 2);
  CHECK(distinctUCount({}) == 0);
}

TEST_CASE("brute-force membership matches the defining sum") {
  const FieldCtx f = FieldCtx::build(2);
  // x1 alone: the only satisfying mask is 1, so <u, v> is in exactly when
  // v = u^0 = 1, for every u.
  const auto m1 = bruteForceMembership(CnfFormula(1, {{1}}));
  for (std::uint64_t ub = 0; ub < 4; ++ub)
    for (std::uint64_t vb = 0; vb < 4; ++vb)
      CHECK(m1(f, f.element(ub), f.element(vb)) == (vb == 1));
  // x2 and not x1: mask 10, so the sum is u itself.
  const auto m2 = bruteForceMembership(CnfFormula(2, {{2}, {-1}}));
  for (std::uint64_t ub = 0; ub < 4; ++ub)
    for (std::uint64_t vb = 0; vb < 4; ++vb)
      CHECK(m2(f, f.element(ub), f.element(vb)) == (vb == ub));
  // Unsatisfiable: never a member.
  const auto m0 = bruteForceMembership(CnfFormula(1, {{1}, {-1}}));
  for (std::uint64_t ub = 0; ub < 4; ++ub)
    for (std::uint64_t vb = 0; vb < 4; ++vb)
      CHECK(!m0(f, f.element(ub), f.element(vb)));
}

TEST_CASE("the harness reduction plants one sparse word on members only") {
  const CnfFormula phi(1, {{1}});
  const WordSet s = shortSparseSet();
  const Poly2 length = Poly2::constant(60);
  const auto reduce = harnessReduction(9, s, phi, length, bruteForceMembership(phi));
  const FieldCtx f = FieldCtx::build(2);

  Word star;
  bool star_seen = false;
  for (std::uint64_t ub = 0; ub < 4; ++ub) {
    for (std::uint64_t vb = 0; vb < 4; ++vb) {
      const auto words = reduce(f, f.element(ub), f.element(vb));
      const bool member = (vb == 1);
      CHECK(words.size() == (member ? 2u : 1u));
      int in_s = 0;
      for (const Word& w : words) in_s += s.contains(w) ? 1 : 0;
      CHECK(in_s == (member ? 1 : 0));
      if (member) {
        const Word& this_star = s.contains(words[0]) ? words[0] : words[1];
        if (star_seen) CHECK(this_star == star);
        star = this_star;
        star_seen = true;
      }
      // Determinism: the same tuple reduces identically.
      CHECK(reduce(f, f.element(ub), f.element(vb)) == words);
    }
  }
  CHECK(star_seen);

  CHECK_THROWS_AS(harnessReduction(9, s, phi, length, MembershipFn{}),
                  std::invalid_argument);
  // Member tuples need a sparse word within the length bound.
  const auto empty_s = harnessReduction(9, WordSet{}, phi, length,
                                        bruteForceMembership(phi));
  CHECK_THROWS_AS(empty_s(f, f.element(0), f.element(1)), std::invalid_argument);
  // A zero length bound leaves no room even for decoys.
  const auto cramped = harnessReduction(9, s, phi, Poly2::constant(0),
                                        bruteForceMembership(phi));
  CHECK_THROWS_AS(cramped(f, f.element(0), f.element(0)), std::invalid_argument);
}

TEST_CASE("candidate collection is independent of the worker count") {
  const CnfFormula phi(1, {{1}});
  const RecoveryInstance inst = harnessInstance(phi, 21, 2, WordSet({Word::parse("0")}));
  const FieldCtx f = FieldCtx::build(2);
  const SupportMap one = collectCandidateWords(inst, f, 1);
  const SupportMap four = collectCandidateWords(inst, f, 4);
  CHECK(one == four);
  CHECK(!one.empty());
  CHECK_THROWS_AS(collectCandidateWords(inst, f, 0), std::invalid_argument);
  RecoveryInstance broken = inst;
  broken.reduction = nullptr;
  CHECK_THROWS_AS(collectCandidateWords(broken, f, 1), std::invalid_argument);
}

TEST_CASE("the planted word supports every u and recovery verifies it") {
  // One variable, census 2: the pipeline picks m = 2 and sweeps 16 tuples.
  const CnfFormula phi(1, {{1}});
  const RecoveryInstance inst = harnessInstance(phi, 33, 2, WordSet({Word::parse("0")}));
  const FieldCtx f = FieldCtx::build(2);

  const SupportMap support = collectCandidateWords(inst, f, 1);
  const auto star = support.find(Word::parse("0"));
  REQUIRE(star != support.end());
  CHECK(distinctUCount(star->second) == 4);  // one member v under every u

  const auto bits = recoverAssignment(inst);
  CHECK(bits == std::vector<std::uint8_t>{1});
}

TEST_CASE("recovery extracts the unique assignment of x1 and not x2") {
  const CnfFormula phi(2, {{1}, {-2}});
  const RecoveryInstance inst = harnessInstance(phi, 5, 4, shortSparseSet());
  const auto bits = recoverAssignment(inst);
  CHECK(bits == std::vector<std::uint8_t>{1, 0});
  // The worker count changes scheduling only, never the answer.
  CHECK(recoverAssignment(inst, 3) == bits);
}

TEST_CASE("an unsatisfiable formula leaves nothing to verify") {
  const CnfFormula phi(1, {{1}, {-1}});
  const RecoveryInstance inst = harnessInstance(phi, 13, 2, WordSet({Word::parse("0")}));
  CHECK_THROWS_AS(recoverAssignment(inst), NoAssignmentFound);
}

TEST_CASE("a reduction that never repeats words starves the pigeonhole") {
  // Every tuple emits a distinct decoy, so no word reaches support 2.
  const CnfFormula phi(2, {{1}, {2}});
  ReductionFn fresh_only = [](const FieldCtx& ctx, FieldElement u, FieldElement v) {
    return std::vector<Word>{
        Word::fromBits(u.bits * ctx.order() + v.bits, 5)};
  };
  const RecoveryInstance inst{phi,    phi.sizeMeasure(),    fresh_only,
                              WordSet({Word::parse("0")}),  Poly2::constant(2),
                              Poly2::constant(60)};
  CHECK_THROWS_AS(recoverAssignment(inst), NoAssignmentFound);
}

TEST_CASE("non-boolean coefficients are reported as such") {
  // The only repeated word w0 shows up at (u=0, v=x) and (u=1, v=x+1), so
  // the solved constant coefficient is x, outside {0,1}.
  const CnfFormula phi(2, {{1}, {2}});
  const Word w0 = Word::fromBits(31, 5);
  ReductionFn rigged = [w0](const FieldCtx& ctx, FieldElement u, FieldElement v) {
    std::vector<Word> out = {Word::fromBits(u.bits * ctx.order() + v.bits, 6)};
    if ((u.bits == 0 && v.bits == 2) || (u.bits == 1 && v.bits == 3))
      out.push_back(w0);
    return out;
  };
  const RecoveryInstance inst{phi,    phi.sizeMeasure(),    rigged,
                              WordSet({Word::parse("0")}),  Poly2::constant(2),
                              Poly2::constant(60)};
  CHECK_THROWS_AS(recoverAssignment(inst), FieldValueNotBoolean);
}

TEST_CASE("recovery validates its instance up front") {
  const CnfFormula phi(2, {{1}, {-2}});
  // Size measure below the variable count.
  RecoveryInstance undersized = harnessInstance(phi, 5, 4, shortSparseSet());
  undersized.n_prime = 1;
  CHECK_THROWS_AS(recoverAssignment(undersized), std::invalid_argument);

  // Sparse set too big for the census bound at the chosen degree.
  const WordSet big({Word::parse("0"), Word::parse("1"), Word::parse("00"),
                     Word::parse("01"), Word::parse("10")});
  const CnfFormula one_var(1, {{1}});
  RecoveryInstance crowded = harnessInstance(one_var, 5, 4, big);
  try {
    recoverAssignment(crowded);
    FAIL("expected a census diagnostic");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("census") != std::string::npos);
  }

  // A reduction emitting beyond the length bound is rejected mid-sweep.
  ReductionFn too_long = [](const FieldCtx&, FieldElement, FieldElement) {
    return std::vector<Word>{Word::fromBits(0, 10)};
  };
  const RecoveryInstance wide{one_var,  one_var.sizeMeasure(), too_long,
                              WordSet{}, Poly2::constant(2),
                              Poly2::constant(4)};
  const FieldCtx f = FieldCtx::build(2);
  CHECK_THROWS_AS(collectCandidateWords(wide, f, 1), std::invalid_argument);
}
