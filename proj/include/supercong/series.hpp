#pragma once

// Truncated formal power series sum_{n=0}^{T} c_n z^n over Q(zeta_N).
// Binary operations truncate at the smaller of the two truncations.

#include <vector>

#include "supercong/cyclo.hpp"

namespace supercong {

class Series {
 public:
  /// Zero series of truncation T.
  Series(unsigned conductor, unsigned T);
  /// Coefficients c_0..c_T; must be nonempty and share one conductor.
  Series(unsigned conductor, std::vector<CycloElem> coeffs);

  static Series from_rationals(const std::vector<Rational>& coeffs);
  static Series one(unsigned conductor, unsigned T);
  /// The series z.
  static Series variable(unsigned conductor, unsigned T);

  unsigned conductor() const { return conductor_; }
  unsigned truncation() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<CycloElem>& coeffs() const { return coeffs_; }

  /// [F]_n; throws std::out_of_range beyond the truncation.
  const CycloElem& coeff(unsigned n) const;
  const CycloElem& operator[](unsigned n) const { return coeffs_[n]; }
  void set(unsigned n, CycloElem value);

  /// Drops (or zero-pads) coefficients to truncation T.
  Series truncated(unsigned T) const;
  bool is_zero() const;

  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);
  Series& operator*=(const CycloElem& s);
  Series& operator*=(const Rational& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const CycloElem& s) { return a *= s; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator-(Series a);
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  void require_same(const Series& b) const;

  unsigned conductor_;
  std::vector<CycloElem> coeffs_;
};

/// z d/dz.
Series euler_delta(const Series& F);
/// z^n -> z^n / n. Requires [F]_0 = 0.
Series log_integrate(const Series& F);
/// Requires [F]_0 = 0.
Series exp_series(const Series& F);
/// Requires [F]_0 = 1.
Series log_series(const Series& F);
/// Multiplicative inverse; requires [F]_0 != 0.
Series series_inverse(const Series& F);
/// F^e for e >= 0.
Series series_pow(const Series& F, unsigned e);
/// H(G(z)); requires [G]_0 = 0.
Series compose(const Series& H, const Series& G);
/// Compositional inverse; requires [F]_0 = 0 and [F]_1 != 0.
Series reversion(const Series& F);
/// [H(G(z))]_n for G the compositional inverse of F, via
/// (1/n) [dH * (F/z)^{-n}]_n. Needs n <= truncation of H and of F.
CycloElem lif_coeff(const Series& H, const Series& F, unsigned n);
/// n-th output coefficient is [F]_{kn}; truncation floor(T/k).
Series cartier(const Series& F, unsigned k);
/// rho^s F(z^rho); truncation rho*T.
Series scaled_substitute(const Series& F, unsigned rho, unsigned s);
/// zeta -> zeta^p applied to every coefficient.
Series frobenius_coeffs(const Series& F, unsigned long p);

}  // namespace supercong
