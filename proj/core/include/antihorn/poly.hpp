#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antihorn {

// Arithmetic helpers that throw std::overflow_error instead of wrapping.
std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b);
std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b);
std::uint64_t checkedPow(std::uint64_t base, std::uint64_t exp);

// A low-degree polynomial with nonnegative integer coefficients, evaluated
// at nonnegative integers.  Nonnegative coefficients make every Poly
// monotone nondecreasing.  Degree is capped at 3.
class Poly {
 public:
  Poly() : coeffs_{0} {}
  explicit Poly(std::vector<std::uint64_t> coeffs);

  std::uint64_t operator()(std::uint64_t n) const;
  std::span<const std::uint64_t> coefficients() const { return coeffs_; }

  // True when p(i) > 1 for every 0 <= i <= n.
  bool exceedsOneUpTo(std::uint64_t n) const;

  std::string str() const;  // e.g. "2 + n + 3n^2"

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;  // c0 + c1*n + c2*n^2 + c3*n^3
};

// A bivariate bound used by the recovery pipeline, where both the formula
// size and the field degree enter the polynomial.  Degree capped at 3 in
// each variable.
class Poly2 {
 public:
  Poly2() = default;  // identically zero
  static Poly2 constant(std::uint64_t c);

  // Sets the coefficient of x^i * y^j.
  Poly2& set(int i, int j, std::uint64_t c);
  std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  std::array<std::array<std::uint64_t, 4>, 4> c_{};
};

// An exact rational in [0,1]; used for world density so that generation
// never touches floating point.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  std::string str() const;                      // "num/den"
  static Rational parse(std::string_view text); // "3/4", "1", or "0.75"

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace antihorn
