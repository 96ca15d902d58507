#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "antihorn/poly.hpp"

using namespace antihorn;

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

TEST_CASE("checked arithmetic throws instead of wrapping") {
  CHECK(checkedAdd(2, 3) == 5);
  CHECK(checkedMul(6, 7) == 42);
  CHECK(checkedPow(3, 4) == 81);
  CHECK(checkedPow(kMax, 1) == kMax);
  CHECK(checkedPow(0, 0) == 1);
  CHECK_THROWS_AS(checkedAdd(kMax, 1), std::overflow_error);
  CHECK_THROWS_AS(checkedMul(kMax / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(checkedPow(2, 64), std::overflow_error);
}

TEST_CASE("polynomial evaluation and normalization") {
  const Poly p({2, 1, 3});  // 2 + n + 3n^2
  CHECK(p(0) == 2);
  CHECK(p(1) == 6);
  CHECK(p(4) == 54);
  CHECK(p.str() == "2 + n + 3n^2");
  CHECK(Poly({5}).str() == "5");
  CHECK(Poly({0, 1}).str() == "n");
  CHECK(Poly{}(17) == 0);
  // Trailing zero coefficients normalize away.
  CHECK(Poly({2, 0, 0}) == Poly({2}));
  CHECK(Poly(std::vector<std::uint64_t>{}) == Poly{});
  CHECK_THROWS_AS(Poly({1, 1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Poly({kMax, 1})(2), std::overflow_error);
}

TEST_CASE("polynomials are monotone, so p(0) decides exceedsOneUpTo") {
  CHECK(Poly({2}).exceedsOneUpTo(10));
  CHECK(Poly({2, 5}).exceedsOneUpTo(0));
  CHECK(!Poly({1, 1}).exceedsOneUpTo(3));
  CHECK(!Poly({0}).exceedsOneUpTo(0));
  // Monotonicity spot check.
  const Poly q({1, 2, 0, 1});
  for (std::uint64_t n = 1; n < 40; ++n) CHECK(q(n - 1) <= q(n));
}

TEST_CASE("bivariate bounds") {
  CHECK(Poly2::constant(7)(3, 9) == 7);
  Poly2 p;
  p.set(1, 0, 2).set(0, 2, 1).set(3, 3, 1);
  CHECK(p(1, 0) == 2);
  CHECK(p(0, 3) == 9);
  CHECK(p(2, 2) == 4 + 4 + 8 * 8);
  CHECK(Poly2{}(5, 5) == 0);
  CHECK_THROWS_AS(Poly2{}.set(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Poly2{}.set(0, -1, 1), std::invalid_argument);
  Poly2 big;
  big.set(3, 3, kMax);
  CHECK_THROWS_AS(big(2, 2), std::overflow_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == Rational{3, 4});
  CHECK(Rational::parse("1") == Rational{1, 1});
  CHECK(Rational::parse("0.75") == Rational{75, 100});
  CHECK(Rational::parse("0") == Rational{0, 1});
  CHECK(Rational{3, 4}.str() == "3/4");
  CHECK(Rational::parse(Rational{1, 2}.str()) == Rational{1, 2});
  CHECK_THROWS_AS(Rational::parse("5/4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.1234567890123"), std::invalid_argument);
}

