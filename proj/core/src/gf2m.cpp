#include "antihorn/gf2m.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace antihorn {

namespace {

bool degreeIsSupported(int m) {
  if (m < 2 || m % 2 != 0) return false;
  int rest = m / 2;
  while (rest % 3 == 0) rest /= 3;  // m = 2 * 3^l
  return rest == 1;
}

}  // namespace

std::uint64_t gf2PolyMod(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw std::domain_error("gf2PolyMod: division by the zero polynomial");
  const int db = std::bit_width(b) - 1;
  while (std::bit_width(a) - 1 >= db && a != 0)
    a ^= b << ((std::bit_width(a) - 1) - db);
  return a;
}

FieldCtx FieldCtx::build(int m) {
  if (!degreeIsSupported(m))
    throw std::invalid_argument("field: degree " + std::to_string(m) + " is not 2 * 3^l");
  if (m > 18)
    throw std::invalid_argument("field: degree " + std::to_string(m) + " beyond the desk-scale cap of 18");
  const std::uint64_t modulus = (std::uint64_t{1} << m) | (std::uint64_t{1} << (m / 2)) | 1u;
  // Trial division by every polynomial of degree 1 .. m/2.
  for (int d = 1; d <= m / 2; ++d)
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
      const std::uint64_t divisor = (std::uint64_t{1} << d) | low;
      if (gf2PolyMod(modulus, divisor) == 0)
        throw std::logic_error("field: modulus trinomial is reducible at degree " + std::to_string(m));
    }
  return FieldCtx(m, modulus);
}

FieldElement FieldCtx::element(std::uint64_t bits) const {
  if (bits >= order())
    throw std::invalid_argument("field: element bits outside GF(2^" + std::to_string(m_) + ")");
  return {static_cast<std::uint32_t>(bits)};
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  // Carryless multiply, then reduce by the trinomial.
  std::uint64_t acc = 0;
  for (int i = 0; i < m_; ++i)
    if ((b.bits >> i) & 1u) acc ^= static_cast<std::uint64_t>(a.bits) << i;
  for (int d = 2 * m_ - 2; d >= m_; --d)
    if ((acc >> d) & 1u) acc ^= modulus_ << (d - m_);
  return {static_cast<std::uint32_t>(acc)};
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.bits == 0) throw std::domain_error("field: inverse of zero");
  return pow(a, order() - 2);
}

std::vector<FieldElement> solveVandermonde(const FieldCtx& f, std::span<const FieldElement> us,
                                           std::span<const FieldElement> vs) {
  const std::size_t n = us.size();
  if (n == 0 || vs.size() != n)
    throw std::invalid_argument("vandermonde: need matching, nonempty point and value lists");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (us[i] == us[j])
        throw std::invalid_argument("vandermonde: duplicate evaluation points make the system singular");

  // Row i: (u_i^0, ..., u_i^(n-1) | v_i).  Gaussian elimination; a pivot
  // always exists because distinct points give a nonsingular matrix.
  std::vector<std::vector<FieldElement>> rows(n, std::vector<FieldElement>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement p = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = p;
      p = f.mul(p, us[i]);
    }
    rows[i][n] = vs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].bits == 0) ++pivot;
    if (pivot == n) throw std::logic_error("vandermonde: singular despite distinct points");
    std::swap(rows[col], rows[pivot]);
    const FieldElement scale = f.inv(rows[col][col]);
    for (std::size_t j = col; j <= n; ++j) rows[col][j] = f.mul(rows[col][j], scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col].bits == 0) continue;
      const FieldElement factor = rows[r][col];
      for (std::size_t j = col; j <= n; ++j)
        rows[r][j] = f.add(rows[r][j], f.mul(factor, rows[col][j]));
    }
  }
  std::vector<FieldElement> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = rows[i][n];
  return a;
}

}  // namespace antihorn
