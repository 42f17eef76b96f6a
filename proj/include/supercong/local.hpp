#pragma once

// Unramified completions of Q(zeta_N) at a prime p not dividing N, realized
// at finite precision as (Z/p^M)[x]/(ghat) where ghat is a Hensel lift of one
// irreducible factor of Phi_N mod p. p is a uniformizer there, so the
// valuation of an element is the minimum valuation of its coordinates.

#include <memory>
#include <string>
#include <vector>

#include "supercong/cyclo.hpp"
#include "supercong/intpoly.hpp"

namespace supercong {

/// Result of a p-adic order computation at finite precision.
struct PValuation {
  enum class Kind {
    Finite,       // exact order `value`, 0 <= value < precision
    AtLeast,      // vanishes modulo p^value (value = working precision)
    NonIntegral,  // negative order `value`
    Zero,         // exactly zero (exact rational checks only)
  };
  Kind kind = Kind::Zero;
  int value = 0;

  static PValuation finite(int v) { return {Kind::Finite, v}; }
  static PValuation at_least(int m) { return {Kind::AtLeast, m}; }
  static PValuation non_integral(int v) { return {Kind::NonIntegral, v}; }
  static PValuation zero() { return {Kind::Zero, 0}; }
  /// Exact order of a rational.
  static PValuation of_rational(const Rational& r, unsigned long p);

  /// Observed order is certified to be >= bound.
  bool meets(int bound) const;
  /// Observed order equals bound exactly.
  bool equals(int bound) const { return kind == Kind::Finite && value == bound; }
  std::string kind_name() const;
  std::string to_string() const;

  friend bool operator==(const PValuation&, const PValuation&) = default;
};

/// Smaller of two observed orders (Zero ranks above everything).
PValuation min(const PValuation& a, const PValuation& b);

/// Precision-M model of O_P / p^M O_P for one prime P | (p) of Q(zeta_N).
class LocalContext {
 public:
  unsigned long p() const { return p_; }
  unsigned conductor() const { return conductor_; }
  unsigned precision() const { return precision_; }
  unsigned residue_degree() const { return f_; }
  const Integer& modulus() const { return modulus_; }  // p^M
  /// Monic lifted factor, coefficients in [0, p^M).
  const modpoly::Poly& ghat() const { return ghat_; }
  /// Phi_N / ghat modulo p^M.
  const modpoly::Poly& cofactor() const { return cofactor_; }
  /// Factor of Phi_N mod p that was lifted.
  const modpoly::Poly& factor_mod_p() const { return factor_mod_p_; }

  /// Same prime ideal at a different precision.
  std::shared_ptr<const LocalContext> with_precision(unsigned M) const;

  friend std::shared_ptr<const LocalContext> make_local_context(unsigned, unsigned long, unsigned);
  friend std::vector<std::shared_ptr<const LocalContext>> make_all_local_contexts(unsigned, unsigned long,
                                                                                  unsigned);

 private:
  LocalContext() = default;
  static std::shared_ptr<const LocalContext> lift(unsigned N, unsigned long p, unsigned M, modpoly::Poly factor);

  unsigned long p_ = 0;
  unsigned conductor_ = 1;
  unsigned precision_ = 1;
  unsigned f_ = 1;
  Integer modulus_;
  modpoly::Poly ghat_;
  modpoly::Poly cofactor_;
  modpoly::Poly factor_mod_p_;
  modpoly::Poly x_to_p_;  // x^p mod (ghat, p^M)
  friend class LocalElem;
};

using LocalContextPtr = std::shared_ptr<const LocalContext>;

/// Context for the prime above p picked by the lexicographically smallest
/// irreducible factor of Phi_N mod p. Throws std::domain_error when p | N.
LocalContextPtr make_local_context(unsigned N, unsigned long p, unsigned M);

/// One context per prime above p, in lexicographic order of factors.
std::vector<LocalContextPtr> make_all_local_contexts(unsigned N, unsigned long p, unsigned M);

/// Irreducible factors of Phi_N modulo p (all of degree ord_N(p)), monic, sorted.
std::vector<modpoly::Poly> factor_cyclotomic_mod_p(unsigned N, unsigned long p);

/// Element of (Z/p^M)[x]/(ghat).
class LocalElem {
 public:
  LocalElem(LocalContextPtr ctx, std::vector<Integer> residues);

  const LocalContext& context() const { return *ctx_; }
  const LocalContextPtr& context_ptr() const { return ctx_; }
  const std::vector<Integer>& residues() const { return residues_; }

  bool is_zero() const;
  LocalElem operator+(const LocalElem& b) const;
  LocalElem operator-(const LocalElem& b) const;
  LocalElem operator*(const LocalElem& b) const;
  friend bool operator==(const LocalElem& a, const LocalElem& b);

  /// Image under the ring endomorphism x -> x^p.
  LocalElem frobenius() const;

 private:
  void require_same(const LocalElem& b) const;
  static std::vector<Integer> from_poly(const LocalContext& ctx, modpoly::Poly r);

  LocalContextPtr ctx_;
  std::vector<Integer> residues_;
  friend LocalElem embed(const CycloElem& a, const LocalContextPtr& ctx);
};

/// Reduction of a p-integral element of Q(zeta_N). Throws std::domain_error
/// when a coordinate has a denominator divisible by p.
LocalElem embed(const CycloElem& a, const LocalContextPtr& ctx);

PValuation valuation(const LocalElem& e);

/// ord_P(a) capped at the context precision; handles p in denominators by
/// rescaling, returning NonIntegral for negative orders.
PValuation val_of(const CycloElem& a, const LocalContextPtr& ctx);

}  // namespace supercong
