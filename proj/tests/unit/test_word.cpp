#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "antihorn/word.hpp"

using namespace antihorn;

TEST_CASE("word parse and str round-trip") {
  CHECK(Word{}.str() == "_");
  CHECK(Word::parse("_") == Word{});
  CHECK(Word::parse("_").size() == 0);
  CHECK(Word::parse("0101").str() == "0101");
  CHECK(Word::parse("0101").size() == 4);
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("012"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0_1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(std::string(Word::kMaxLength + 1, '0')),
                  std::invalid_argument);
}

TEST_CASE("fromBits places the most significant bit first") {
  const Word w = Word::fromBits(0b011, 3);
  CHECK(w.str() == "011");
  CHECK(w.bit(0) == false);
  CHECK(w.bit(1) == true);
  CHECK(w.bit(2) == true);
  CHECK_THROWS_AS(w.bit(3), std::out_of_range);
  CHECK_THROWS_AS(Word::fromBits(0b100, 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::fromBits(0, 64), std::invalid_argument);
  CHECK(Word::fromBits(0, 0) == Word{});
}

TEST_CASE("length-lex order and rank enumeration") {
  const char* expect[] = {"_", "0", "1", "00", "01", "10", "11", "000"};
  for (std::uint64_t r = 0; r < 8; ++r) {
    CHECK(Word::fromRank(r).str() == expect[r]);
    CHECK(Word::fromRank(r).rank() == r);
  }
  for (std::uint64_t r = 1; r < 300; ++r) {
    CHECK(Word::fromRank(r - 1) < Word::fromRank(r));
    CHECK(Word::fromRank(r).rank() == r);
  }
  CHECK(Word::countUpToLength(-1) == 0);
  CHECK(Word::countUpToLength(0) == 1);
  CHECK(Word::countUpToLength(3) == 15);
  CHECK(Word::countUpToLength(10) == 2047);
  CHECK_THROWS_AS(Word::countUpToLength(63), std::domain_error);
  CHECK_THROWS_AS(Word::fromRank(Word::countUpToLength(62)), std::domain_error);
}

TEST_CASE("builder appends symbols and whole words") {
  WordBuilder b;
  b.push(true);
  b.push(false);
  b.append(Word::parse("11"));
  CHECK(b.size() == 4);
  CHECK(b.take().str() == "1011");
  CHECK(b.size() == 0);

  // The builder is the only path to words past the 63-bit fromBits limit.
  WordBuilder big;
  for (int i = 0; i < 100; ++i) big.push(i % 2 == 1);
  const Word w = big.take();
  CHECK(w.size() == 100);
  CHECK(w.bit(0) == false);
  CHECK(w.bit(99) == true);

  WordBuilder over;
  for (int i = 0; i < Word::kMaxLength; ++i) over.push(false);
  CHECK_THROWS_AS(over.push(false), std::length_error);
}

TEST_CASE("word set sorts, dedups, and counts by length") {
  const WordSet s({Word::parse("11"), Word::parse("0"), Word::parse("11"),
                   Word::parse("000")});
  CHECK(s.size() == 3);
  CHECK(s.contains(Word::parse("0")));
  CHECK(!s.contains(Word::parse("1")));
  CHECK(s.countUpToLength(0) == 0);
  CHECK(s.countUpToLength(2) == 2);
  CHECK(s.countUpToLength(60) == 3);
  CHECK(s.maxLength() == 3);
  CHECK(s.words().front() == Word::parse("0"));
  CHECK(WordSet{}.maxLength() == -1);
  CHECK(WordSet{}.size() == 0);
}
