#pragma once

#include <cstddef>
#include <vector>

#include "supercong/rational.hpp"

namespace supercong {

/// Dense integer polynomial, ascending degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
struct IntPoly {
  std::vector<Integer> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  const Integer& operator[](std::size_t i) const { return coeffs[i]; }

  void normalize();
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b for monic b; throws std::domain_error if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// N-th cyclotomic polynomial, by dividing x^N - 1 by Phi_d for proper divisors d.
const IntPoly& cyclotomic_poly(unsigned N);

unsigned euler_phi(unsigned N);

/// Smallest f >= 1 with p^f = 1 mod N; requires gcd(p, N) = 1.
unsigned multiplicative_order(unsigned long p, unsigned N);

// Polynomials with coefficients reduced modulo a positive integer m;
// results are normalized (no trailing zeros modulo m).
namespace modpoly {

using Poly = std::vector<Integer>;

void normalize(Poly& a, const Integer& m);
Poly reduce(const IntPoly& a, const Integer& m);
Poly add(const Poly& a, const Poly& b, const Integer& m);
Poly sub(const Poly& a, const Poly& b, const Integer& m);
Poly mul(const Poly& a, const Poly& b, const Integer& m);
/// Remainder modulo a monic divisor.
Poly rem_monic(Poly a, const Poly& b, const Integer& m);
/// (quotient, remainder) modulo a monic divisor.
std::pair<Poly, Poly> divmod_monic(Poly a, const Poly& b, const Integer& m);
/// Division with remainder over the field Z/p (b nonzero).
std::pair<Poly, Poly> divmod_field(Poly a, const Poly& b, const Integer& p);
/// Monic gcd over Z/p.
Poly gcd_field(Poly a, Poly b, const Integer& p);
/// Returns (g, s, t) with s*a + t*b = g monic, over Z/p.
struct Bezout {
  Poly g, s, t;
};
Bezout gcdext_field(const Poly& a, const Poly& b, const Integer& p);
/// base^e modulo (mod_poly, m), with mod_poly monic.
Poly powmod(Poly base, Integer e, const Poly& mod_poly, const Integer& m);
Poly make_monic_field(Poly a, const Integer& p);

}  // namespace modpoly

}  // namespace supercong
