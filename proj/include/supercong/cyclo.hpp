#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "supercong/intpoly.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// Element of Q(zeta_N), stored as rational coordinates in the basis
/// 1, zeta, ..., zeta^{phi(N)-1} of Q[x]/Phi_N. Conductor 1 is Q itself.
///
/// Arithmetic between elements requires equal conductors and throws
/// std::invalid_argument otherwise. Values are immutable once built, so
/// they may be shared across threads freely.
class CycloElem {
 public:
  /// Zero of Q(zeta_N).
  explicit CycloElem(unsigned conductor = 1);
  CycloElem(unsigned conductor, Rational value);
  /// Coordinates of any length; reduced modulo Phi_N.
  CycloElem(unsigned conductor, std::vector<Rational> coords);

  static CycloElem zeta(unsigned conductor, long long power = 1);

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  /// Valid when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  CycloElem inverse() const;

  CycloElem& operator+=(const CycloElem& b);
  CycloElem& operator-=(const CycloElem& b);
  CycloElem& operator*=(const CycloElem& b);
  CycloElem& operator*=(const Rational& s);
  CycloElem& operator/=(const CycloElem& b) { return *this *= b.inverse(); }
  /// this += a * b, without a temporary for the common conductor-1 case.
  void add_product(const CycloElem& a, const CycloElem& b);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
  friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  friend CycloElem operator-(CycloElem a);

  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same(const CycloElem& b) const;
  void reduce(std::vector<Rational>& v) const;

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloElem& a);

/// The automorphism zeta -> zeta^p of Q(zeta_N). Throws std::domain_error when p | N.
CycloElem frobenius_global(const CycloElem& a, unsigned long p);

/// Lowest common denominator of the coordinates.
Integer common_denominator(const CycloElem& a);

}  // namespace supercong
