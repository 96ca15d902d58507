#include <doctest.h>

#include <stdexcept>
#include <string_view>
#include <vector>

#include "antihorn/clause.hpp"
#include "antihorn/word.hpp"

using namespace antihorn;

namespace {

AntiHornClause cl(std::string_view text) { return AntiHornClause::parse(text); }
AntiHornFormula fm(std::string_view text) { return AntiHornFormula::parse(text); }

WordSet setOf(std::initializer_list<const char*> words) {
  std::vector<Word> out;
  for (const char* w : words) out.push_back(Word::parse(w));
  return WordSet(std::move(out));
}

// Every clause with lhs drawn from {_, 0, 1} and rhs a subset of {_, 0, 1}.
std::vector<AntiHornClause> smallClausePool() {
  const std::vector<Word> pool = {Word::parse("_"), Word::parse("0"),
                                  Word::parse("1")};
  std::vector<AntiHornClause> out;
  for (const Word& lhs : pool) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<Word> rhs;
      for (unsigned i = 0; i < 3; ++i) {
        if (mask & (1u << i)) rhs.push_back(pool[i]);
      }
      out.emplace_back(lhs, std::move(rhs));
    }
  }
  return out;
}

std::vector<WordSet> smallSetPool() {
  const std::vector<Word> pool = {Word::parse("_"), Word::parse("0"),
                                  Word::parse("1")};
  std::vector<WordSet> out;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Word> members;
    for (unsigned i = 0; i < 3; ++i) {
      if (mask & (1u << i)) members.push_back(pool[i]);
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

}  // namespace

TEST_CASE("clause text form round-trips") {
  CHECK(cl("0 -> 1|00").str() == "0 -> 1|00");
  CHECK(cl("0 ->").str() == "0 ->");
  CHECK(cl("_ -> _").str() == "_ -> _");
  CHECK(AntiHornClause{}.str() == "_ ->");
  CHECK(cl("  0  ->  00 | 1 ") == cl("0 -> 1|00"));
  CHECK_THROWS_AS(cl("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(cl("0 -> 2"), std::invalid_argument);
}

TEST_CASE("rhs is kept sorted and duplicate-free") {
  const AntiHornClause c(Word::parse("0"),
                         {Word::parse("00"), Word::parse("1"), Word::parse("00")});
  CHECK(c.rhsSize() == 2);
  CHECK(c.rhs()[0] == Word::parse("1"));
  CHECK(c.rhs()[1] == Word::parse("00"));
  CHECK(c.rhsContains(Word::parse("00")));
  CHECK(!c.rhsContains(Word::parse("0")));
  CHECK(c == cl("0 -> 00|1"));
}

TEST_CASE("clause derivation") {
  // Same lhs: derive exactly when the rhs shrinks or stays put.
  CHECK(derives(cl("0 -> 0"), cl("0 -> 0|1")));
  CHECK(!derives(cl("0 -> 0|1"), cl("0 -> 0")));
  CHECK(derives(cl("0 ->"), cl("0 -> 1")));
  CHECK(!derives(cl("0 -> 1"), cl("0 ->")));
  // Different lhs: anything derives anything.
  CHECK(derives(cl("0 -> 1"), cl("00 ->")));
  CHECK(derives(cl("00 ->"), cl("0 -> 1")));
}

TEST_CASE("derivation is reflexive and transitive on a fixed lhs") {
  const auto pool = smallClausePool();
  for (const auto& g : pool) CHECK(derives(g, g));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (a.lhs() != b.lhs()) continue;
      for (const auto& c : pool) {
        if (b.lhs() != c.lhs()) continue;
        if (derives(a, b) && derives(b, c)) CHECK(derives(a, c));
      }
    }
  }
}

TEST_CASE("derivation is sound for satisfaction on a fixed lhs") {
  const auto pool = smallClausePool();
  const auto sets = smallSetPool();
  for (const auto& g : pool) {
    for (const auto& d : pool) {
      if (g.lhs() != d.lhs() || !derives(g, d)) continue;
      for (const auto& s : sets) {
        if (satisfied(g, s)) CHECK(satisfied(d, s));
      }
    }
  }
}

TEST_CASE("clause satisfaction by a finite set") {
  CHECK(satisfied(cl("0 -> 1|00"), setOf({"0", "00"})));
  CHECK(!satisfied(cl("0 ->"), setOf({"0"})));
  CHECK(satisfied(cl("0 -> 1"), WordSet{}));
  CHECK(satisfied(cl("0 ->"), setOf({"1"})));
}

TEST_CASE("formula text form and canonical clause order") {
  const AntiHornFormula f = fm("0 -> 1 ; _ -> 0 ; 0 -> 1");
  CHECK(f.size() == 2);
  CHECK(f.str() == "_ -> 0 ; 0 -> 1");
  CHECK(AntiHornFormula{}.str() == "");
  CHECK(fm("") == AntiHornFormula{});
  CHECK(fm(f.str()) == f);
}

TEST_CASE("formula derivation") {
  CHECK(derives(fm("0 ->"), fm("0 -> 1 ; 0 ->")));
  CHECK(derives(fm("0 -> 1"), AntiHornFormula{}));
  CHECK(derives(AntiHornFormula{}, AntiHornFormula{}));
  CHECK(!derives(AntiHornFormula{}, fm("0 -> 1")));
  CHECK(anyDerives(fm("1 -> 0 ; 0 -> 1"), cl("0 -> 0|1")));
  CHECK(!anyDerives(fm("0 -> 0"), cl("0 -> 1")));
}

TEST_CASE("formula satisfaction") {
  CHECK(satisfied(AntiHornFormula{}, WordSet{}));
  CHECK(satisfied(fm("0 -> ; 1 -> 00"), setOf({"00"})));
  CHECK(!satisfied(fm("0 -> ; 1 -> 00"), setOf({"0", "00"})));
  // Satisfaction is monotone under dropping clauses.
  const auto sets = smallSetPool();
  const AntiHornFormula whole = fm("_ -> 0 ; 0 -> 1 ; 1 ->");
  const AntiHornFormula part = fm("_ -> 0 ; 1 ->");
  for (const auto& s : sets) {
    if (satisfied(whole, s)) CHECK(satisfied(part, s));
  }
}

TEST_CASE("formula-level derivation is sound for satisfaction") {
  // If Gamma derives Delta clause-by-clause on one lhs, every set satisfying
  // Gamma satisfies Delta.
  const auto sets = smallSetPool();
  const AntiHornFormula gamma = fm("0 -> _ ; 0 -> 1");
  const AntiHornFormula delta = fm("0 -> _|0 ; 0 -> 1|00 ; 0 -> 0|1");
  REQUIRE(derives(gamma, delta));
  for (const auto& s : sets) {
    if (satisfied(gamma, s)) CHECK(satisfied(delta, s));
  }
}

TEST_CASE("lhs words and rhs width helpers") {
  const AntiHornFormula f = fm("1 -> 0 ; _ -> 0|1|00 ; 1 -> _ ; 0 ->");
  const auto lhs = lhsWords(f);
  REQUIRE(lhs.size() == 3);
  CHECK(lhs[0] == Word::parse("_"));
  CHECK(lhs[1] == Word::parse("0"));
  CHECK(lhs[2] == Word::parse("1"));
  CHECK(maxRhsSize(f) == 3);
  CHECK(maxRhsSize(AntiHornFormula{}) == 0);
}
