#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "plotkin/linear_code.hpp"

namespace plotkin {

// GF(2^m) with exp/log tables over a primitive polynomial.
class GaloisField {
 public:
  GaloisField(int m, uint32_t prim_poly) : m_(m), prim_poly_(prim_poly) {
    if (m < 2 || m > 16) throw std::invalid_argument("GaloisField: unsupported extension degree");
    int q = 1 << m;
    exp_.assign(2 * (q - 1), 0);
    log_.assign(q, 0);
    uint32_t x = 1;
    for (int i = 0; i < q - 1; ++i) {
      if (x == 1 && i > 0)
        throw std::invalid_argument("GaloisField: polynomial is not primitive");
      exp_[i] = exp_[i + q - 1] = static_cast<uint16_t>(x);
      log_[x] = static_cast<uint16_t>(i);
      x <<= 1;
      if (x & q) x ^= prim_poly_;
    }
    if (x != 1) throw std::invalid_argument("GaloisField: polynomial is not primitive");
  }

  static GaloisField gf16() { return GaloisField(4, 0b10011); }  // x^4 + x + 1

  static GaloisField with_default_poly(int m) {
    // Conventional primitive polynomials for small extension degrees.
    static constexpr uint32_t kPoly[] = {0,         0,         0b111,      0b1011,
                                         0b10011,   0b100101,  0b1000011,  0b10001001,
                                         0b100011101};
    if (m < 2 || m > 8) throw std::invalid_argument("with_default_poly: unsupported m");
    return GaloisField(m, kPoly[m]);
  }

  int m() const { return m_; }
  int order() const { return (1 << m_) - 1; }
  uint32_t prim_poly() const { return prim_poly_; }

  uint16_t mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  uint16_t add(uint16_t a, uint16_t b) const { return a ^ b; }
  uint16_t alpha_pow(int e) const { return exp_[((e % order()) + order()) % order()]; }
  uint16_t log(uint16_t a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    return log_[a];
  }

 private:
  int m_;
  uint32_t prim_poly_;
  std::vector<uint16_t> exp_, log_;
};

// Polynomial over GF(2) packed as bits, coefficient of x^i at bit i.
using BitPoly = uint64_t;

inline int poly_degree(BitPoly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline BitPoly poly_mul(BitPoly a, BitPoly b) {
  BitPoly r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline BitPoly poly_mod(BitPoly a, BitPoly mod) {
  int dm = poly_degree(mod);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a))
    a ^= mod << (d - dm);
  return a;
}

// Minimal polynomial of alpha^e: product of (x - alpha^c) over the conjugacy
// class {e, 2e, 4e, ...}; the coefficients land in GF(2).
inline BitPoly minimal_polynomial(const GaloisField& gf, int e) {
  int n = gf.order();
  std::set<int> conj;
  int c = ((e % n) + n) % n;
  while (!conj.count(c)) {
    conj.insert(c);
    c = (2 * c) % n;
  }
  // poly coefficients in the field, multiplied up one root at a time
  std::vector<uint16_t> coeffs = {1};
  for (int exp : conj) {
    uint16_t root = gf.alpha_pow(exp);
    std::vector<uint16_t> next(coeffs.size() + 1, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] ^= coeffs[i];
      next[i] ^= gf.mul(coeffs[i], root);
    }
    coeffs = std::move(next);
  }
  BitPoly p = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 1) throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
    if (coeffs[i]) p |= BitPoly(1) << i;
  }
  return p;
}

// Narrow-sense generator polynomial: lcm of the minimal polynomials of
// alpha^1 .. alpha^(designed_d - 1).
inline BitPoly bch_generator(const GaloisField& gf, int designed_d) {
  if (designed_d < 1 || designed_d > gf.order())
    throw std::invalid_argument("bch_generator: invalid designed distance");
  std::set<BitPoly> factors;
  for (int e = 1; e <= designed_d - 1; ++e) factors.insert(minimal_polynomial(gf, e));
  BitPoly g = 1;
  for (BitPoly f : factors) g = poly_mul(g, f);
  return g;
}

// Cyclic code of length 2^m - 1 generated by g(x); rows are x^i * g(x).
inline LinearCode bch_code(int m, int designed_d) {
  GaloisField gf = (m == 4) ? GaloisField::gf16() : GaloisField::with_default_poly(m);
  BitPoly g = bch_generator(gf, designed_d);
  int n = gf.order();
  int k = n - poly_degree(g);
  std::vector<BinaryWord> rows;
  for (int i = 0; i < k; ++i) {
    BinaryWord row(n);
    for (int j = 0; j <= poly_degree(g); ++j)
      if ((g >> j) & 1) row.set(i + j, true);
    rows.push_back(row);
  }
  return LinearCode::from_rows(
      n, std::move(rows), designed_d,
      "bch(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

// Narrow-sense code extended by one overall parity bit (appended last).
inline LinearCode extended_bch(int m, int designed_d) {
  LinearCode base = bch_code(m, designed_d);
  int n = base.n() + 1;
  std::vector<BinaryWord> rows;
  for (const auto& r : base.generator_rows()) {
    BinaryWord row(n);
    for (int i = 0; i < base.n(); ++i)
      if (r.get(i)) row.set(i, true);
    row.set(n - 1, r.weight() % 2 != 0);
    rows.push_back(row);
  }
  int d = base.d_declared() + (base.d_declared() % 2);
  LinearCode code = LinearCode::from_rows(
      n, std::move(rows), d,
      "ebch(" + std::to_string(n) + "," + std::to_string(base.k()) + ")");
  if (code.k() <= kEnumerationBound) code.verify_min_distance();
  return code;
}

}  // namespace plotkin
