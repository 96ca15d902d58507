#include "antihorn/poly.hpp"

#include <stdexcept>

namespace antihorn {

std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiply");
  return r;
}

std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

std::uint64_t checkedPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checkedMul(r, base);
  return r;
}

Poly::Poly(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  if (coeffs_.size() > 4) throw std::invalid_argument("Poly: degree above 3 not supported");
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Poly::operator()(std::uint64_t n) const {
  // Horner, overflow-checked.
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checkedAdd(checkedMul(acc, n), *it);
  return acc;
}

bool Poly::exceedsOneUpTo(std::uint64_t n) const {
  // Monotone, so the minimum over [0, n] sits at 0.
  (void)n;
  return (*this)(0) > 1;
}

std::string Poly::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0 && coeffs_.size() > 1) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += std::to_string(coeffs_[i]);
    if (i == 1) out += "n";
    if (i >= 2) out += "n^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out;
}

Poly2 Poly2::constant(std::uint64_t c) {
  Poly2 p;
  p.c_[0][0] = c;
  return p;
}

Poly2& Poly2::set(int i, int j, std::uint64_t c) {
  if (i < 0 || i > 3 || j < 0 || j > 3)
    throw std::invalid_argument("Poly2::set: degree above 3 not supported");
  c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
  return *this;
}

std::uint64_t Poly2::operator()(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t acc = 0;
  std::uint64_t xp = 1;
  for (int i = 0; i <= 3; ++i) {
    std::uint64_t yp = 1;
    for (int j = 0; j <= 3; ++j) {
      const std::uint64_t c = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != 0) acc = checkedAdd(acc, checkedMul(c, checkedMul(xp, yp)));
      if (j < 3) yp = checkedMul(yp, y);
    }
    if (i < 3) xp = checkedMul(xp, x);
  }
  return acc;
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(std::string_view text) {
  auto parseInt = [](std::string_view s) -> std::uint64_t {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty number");
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("Rational::parse: bad digit");
      v = checkedAdd(checkedMul(v, 10), static_cast<std::uint64_t>(c - '0'));
    }
    return v;
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parseInt(text.substr(0, slash));
    r.den = parseInt(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 9) throw std::invalid_argument("Rational::parse: too many decimal places");
    const std::uint64_t whole = parseInt(text.substr(0, dot));
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    r.num = checkedAdd(checkedMul(whole, den), frac.empty() ? 0 : parseInt(frac));
    r.den = den;
  } else {
    r.num = parseInt(text);
    r.den = 1;
  }
  if (r.den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  if (r.num > r.den) throw std::invalid_argument("Rational::parse: value above 1");
  return r;
}

}  // namespace antihorn
