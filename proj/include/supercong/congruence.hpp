#pragma once

// Numerical verification of the supercongruences: each check computes an
// exact difference, measures its p-adic order in a local context and
// compares it with the predicted exponent.

#include <string>
#include <utility>
#include <vector>

#include "supercong/framing.hpp"
#include "supercong/local.hpp"
#include "supercong/series.hpp"

namespace supercong {

enum class Status { Pass, Fail, Skip, Invalid };
std::string status_name(Status s);

struct CongruenceReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  PValuation observed;
  int predicted = 0;
  Status status = Status::Skip;
  bool sharp = false;
  std::string note;
  bool measured = false;  // false for skip and precondition records

  bool passed() const { return status == Status::Pass; }
  /// Value of a parameter, or "" when absent.
  std::string param(const std::string& key) const;
};

using Params = std::vector<std::pair<std::string, std::string>>;

/// Pass iff observed meets predicted. An AtLeast(M) observation with
/// M < predicted certifies nothing and is reported as Invalid.
CongruenceReport make_report(std::string id, Params params, PValuation observed, int predicted);
CongruenceReport skip_report(std::string id, Params params, std::string reason);
CongruenceReport invalid_report(std::string id, Params params, std::string reason);

/// Periodic sequence a_1..a_N of minimal period N, extended by a_0 := a_N.
class PeriodicSeq {
 public:
  /// Values of one period; reduced to the minimal period.
  explicit PeriodicSeq(std::vector<CycloElem> values);

  unsigned conductor() const { return values_.front().conductor(); }
  unsigned period() const { return static_cast<unsigned>(values_.size()); }
  const std::vector<CycloElem>& values() const { return values_; }
  /// a_k for any k >= 0.
  const CycloElem& operator[](unsigned long k) const;
  /// sum_{n=1}^{T} a_n z^n.
  Series to_series(unsigned T) const;

 private:
  std::vector<CycloElem> values_;
};

bool is_p_integral(const CycloElem& a, unsigned long p);

// correction tables
int epsilon_p(unsigned long p);
int epsilon_pN(unsigned long p, unsigned N);
/// Requires p not dividing N.
int gamma_p(unsigned long p, unsigned N);
struct EpsilonGamma {
  int eps_p, eps_pN, gamma;
};
EpsilonGamma epsilon_gamma(unsigned long p, unsigned N);

// predicted exponents
int main_theorem_bound(unsigned long p, unsigned n, unsigned N);
int reduction_bound(unsigned long p, unsigned n);
int fractional_bound(unsigned long p, unsigned n, unsigned rho, unsigned N);
/// The full bound; `lowered` subtracts one more at p = 2.
int wolstenholme_bound(unsigned long p, unsigned long n, unsigned N, bool lowered);

/// Frob(a_{m p^{r-1}}) - a_{m p^r} against s*r, with a_n = [A]_n.
std::vector<CongruenceReport> s_order_scan(const Series& A, unsigned s, const LocalContextPtr& ctx,
                                           const std::vector<std::pair<unsigned, unsigned>>& pairs);

/// q_1..q_T (index 0 unused) with int V = -sum_n log(1 - q_n z^n).
std::vector<CycloElem> dwork_q_extract(const Series& V, unsigned T);
/// -sum_n log(1 - q_n z^n) to truncation T.
Series dwork_reconstruct(const std::vector<CycloElem>& q, unsigned T);

/// Integrality of Y = exp(int V); Frob Y(z^p) / Y(z)^p in 1 + pzO[[z]];
/// integrality of the q-sequence. Three reports.
std::vector<CongruenceReport> dwork_checks(const Series& V, const LocalContextPtr& ctx, unsigned T);

/// [exp(n int V)]_m against max(0, ord_p n - ord_p m) for m = 1..m_max.
std::vector<CongruenceReport> power_coeff_bound_check(const Series& V, const LocalContextPtr& ctx, unsigned long n,
                                                      unsigned m_max);

/// Exact harmonic sums over 1 <= k <= n with p not dividing k:
/// sum 1/k, sum 1/k^2, and for p = 2 the odd-k sum of 1/k^2.
std::vector<CongruenceReport> harmonic_bounds(unsigned long p, unsigned long n);

/// H_{p-1} against 2 and binom(2p-1, p-1) - 1 against 3; skipped below p = 5.
std::vector<CongruenceReport> wolstenholme_binomial(unsigned long p);

/// sum_{k <= n, p not dividing k} a_{n-k} a_k / k^2. At p = 2 the bound
/// lowered by one gates; the full bound is recorded in the note.
CongruenceReport wolstenholme_general(const PeriodicSeq& a, const LocalContextPtr& ctx, unsigned long n);

/// Frob(a_n) - a_{pn} for the framed coefficients of V, where N is the
/// period of V's coefficients. Needs V to truncation p*n.
CongruenceReport main_theorem_check(const Series& V, unsigned N, const FramingParams& params,
                                    const LocalContextPtr& ctx, unsigned n);

/// (2/(p^2 n^2))(Frob a_n - a_{pn}) + nu [V exp(nu p n int V) int^2 X]_{pn},
/// X = Frob V(z^p) - V(z), against ord_p(pn) - [p = 3].
CongruenceReport reduction_identity_check(const Series& V, const Rational& nu, const LocalContextPtr& ctx,
                                          unsigned n);
/// Same left side minus nu [delta(Frob V(z^p) + V) exp(nu p n int V) int^3 X]_{pn}.
CongruenceReport reduction_lemma_check(const Series& V, const Rational& nu, const LocalContextPtr& ctx, unsigned n);

/// Frob(a~_n) - a~_{pn} for the weight-3 fractional framing.
CongruenceReport fractional_theorem_check(const FramingParams& params, const Series& V, unsigned N,
                                          const LocalContextPtr& ctx, unsigned n);

/// binom(a p^r, b p^r) - binom(a p^{r-1}, b p^{r-1}) against 3r - eps_p.
CongruenceReport jk_check(unsigned long a, unsigned long b, unsigned long p, unsigned r);

}  // namespace supercong
