#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace antihorn {

// An element of GF(2^m), packed as m coefficient bits (bit i = coefficient
// of x^i).  Elements only make sense relative to the FieldCtx that made
// them.
struct FieldElement {
  std::uint32_t bits = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// GF(2^m) for m = 2 * 3^l (m in {2, 6, 18}), modulo the trinomial
// x^m + x^(m/2) + 1.  Construction verifies irreducibility by exhaustive
// trial division, so a broken modulus can never produce silent nonsense.
class FieldCtx {
 public:
  static FieldCtx build(int m);

  int degree() const { return m_; }
  std::uint64_t order() const { return std::uint64_t{1} << m_; }
  std::uint64_t modulusBits() const { return modulus_; }

  FieldElement element(std::uint64_t bits) const;  // bits < order
  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const { return {a.bits ^ b.bits}; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;  // throws std::domain_error on zero
  FieldElement pow(FieldElement a, std::uint64_t e) const;

 private:
  FieldCtx(int m, std::uint64_t modulus) : m_(m), modulus_(modulus) {}
  int m_ = 2;
  std::uint64_t modulus_ = 0b111;
};

// Remainder of polynomial division over GF(2); also used by the
// irreducibility check.  Public so tests can cross-check it.
std::uint64_t gf2PolyMod(std::uint64_t a, std::uint64_t b);

// Solves sum_j a_j * (u_i)^j = v_i for the coefficient vector a, given n
// pairwise-distinct evaluation points.  Duplicate points raise
// std::invalid_argument; with distinct points the system is nonsingular.
std::vector<FieldElement> solveVandermonde(const FieldCtx& f, std::span<const FieldElement> us,
                                           std::span<const FieldElement> vs);

}  // namespace antihorn
