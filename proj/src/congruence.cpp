#include "supercong/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace supercong {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
    case Status::Invalid:
      return "invalid";
  }
  return "?";
}

std::string CongruenceReport::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return "";
}

CongruenceReport make_report(std::string id, Params params, PValuation observed, int predicted) {
  CongruenceReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.observed = observed;
  r.predicted = predicted;
  r.measured = true;
  if (observed.kind == PValuation::Kind::AtLeast && observed.value < predicted) {
    r.status = Status::Invalid;
    r.note = "precision " + std::to_string(observed.value) + " below predicted bound";
  } else {
    r.status = observed.meets(predicted) ? Status::Pass : Status::Fail;
  }
  r.sharp = observed.equals(predicted);
  return r;
}

CongruenceReport skip_report(std::string id, Params params, std::string reason) {
  CongruenceReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.status = Status::Skip;
  r.note = std::move(reason);
  return r;
}

CongruenceReport invalid_report(std::string id, Params params, std::string reason) {
  CongruenceReport r = skip_report(std::move(id), std::move(params), std::move(reason));
  r.status = Status::Invalid;
  return r;
}

// ---------------------------------------------------------------------------

PeriodicSeq::PeriodicSeq(std::vector<CycloElem> values) {
  if (values.empty()) throw std::invalid_argument("PeriodicSeq: empty period");
  const std::size_t N = values.size();
  for (std::size_t d = 1; d <= N; ++d) {
    if (N % d) continue;
    bool ok = true;
    for (std::size_t k = d; k < N && ok; ++k) ok = values[k] == values[k - d];
    if (ok) {
      values.resize(d);
      break;
    }
  }
  for (const auto& v : values)
    if (v.conductor() != values.front().conductor()) throw std::invalid_argument("PeriodicSeq: conductor mismatch");
  values_ = std::move(values);
}

const CycloElem& PeriodicSeq::operator[](unsigned long k) const {
  const unsigned long N = values_.size();
  unsigned long r = k % N;
  return values_[r == 0 ? N - 1 : r - 1];
}

Series PeriodicSeq::to_series(unsigned T) const {
  Series s(conductor(), T);
  for (unsigned n = 1; n <= T; ++n) s.set(n, (*this)[n]);
  return s;
}

bool is_p_integral(const CycloElem& a, unsigned long p) {
  for (const auto& c : a.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return false;
  return true;
}

int epsilon_p(unsigned long p) { return p == 2 ? 2 : p == 3 ? 1 : 0; }

int epsilon_pN(unsigned long p, unsigned N) {
  if (p == 2) {
    if (N % 2 == 0) return std::max(ord_p(static_cast<long long>(N), 2), ord_p(static_cast<long long>(N) + 2, 2));
    return 1 + ord_p(static_cast<long long>(N) + 1, 2);
  }
  if (p == 3) return 1 + ord_p(static_cast<long long>(N), 3);
  return ord_p(static_cast<long long>(N), p);
}

int gamma_p(unsigned long p, unsigned N) {
  if (N % p == 0) throw std::domain_error("gamma_p needs p not dividing N");
  if (p == 2) return 1 + ord_p(static_cast<long long>(N) + 1, 2);
  return p == 3 ? 1 : 0;
}

EpsilonGamma epsilon_gamma(unsigned long p, unsigned N) { return {epsilon_p(p), epsilon_pN(p, N), gamma_p(p, N)}; }

namespace {

int ordl(unsigned long n, unsigned long p) { return ord_p(static_cast<long long>(n), p); }

std::string str(unsigned long v) { return std::to_string(v); }

PValuation min_valuation(const std::vector<CycloElem>& xs, std::size_t from, const LocalContextPtr& ctx) {
  PValuation best = PValuation::at_least(static_cast<int>(ctx->precision()));
  for (std::size_t i = from; i < xs.size(); ++i) best = min(best, val_of(xs[i], ctx));
  return best;
}

CycloElem cyclo_pow(const CycloElem& a, unsigned e) {
  CycloElem r(a.conductor(), Rational(1));
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

bool coeffs_p_integral(const Series& V, unsigned upto, unsigned long p) {
  for (unsigned k = 1; k <= upto && k <= V.truncation(); ++k)
    if (!is_p_integral(V[k], p)) return false;
  return true;
}

// Frob V(z^p), truncated back to V's truncation.
Series frob_substitute(const Series& V, unsigned long p) {
  return scaled_substitute(frobenius_coeffs(V, p), static_cast<unsigned>(p), 0).truncated(V.truncation());
}

}  // namespace

int main_theorem_bound(unsigned long p, unsigned n, unsigned N) {
  const int on = ordl(n, p);
  return 2 * (on + 1) - (p == 2 ? 1 : 0) + std::max(0, on + 1 - gamma_p(p, N));
}

int reduction_bound(unsigned long p, unsigned n) { return ordl(p * n, p) - (p == 3 ? 1 : 0); }

int fractional_bound(unsigned long p, unsigned n, unsigned rho, unsigned N) {
  const int opn = ordl(p * n, p);
  const int orho = ordl(rho, p);
  return 2 * opn + orho - (p == 2 ? 1 : 0) + std::max(0, opn - orho - gamma_p(p, N));
}

int wolstenholme_bound(unsigned long p, unsigned long n, unsigned N, bool lowered) {
  return std::max(0, ordl(n, p) - epsilon_pN(p, N) - (lowered && p == 2 ? 1 : 0));
}

// ---------------------------------------------------------------------------

std::vector<CongruenceReport> s_order_scan(const Series& A, unsigned s, const LocalContextPtr& ctx,
                                           const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  const unsigned long p = ctx->p();
  std::vector<CongruenceReport> out;
  for (auto [m, r] : pairs) {
    Params params{{"p", str(p)}, {"s", str(s)}, {"m", str(m)}, {"r", str(r)}};
    if (m < 1 || r < 1) {
      out.push_back(invalid_report("s_order", params, "m and r must be >= 1"));
      continue;
    }
    const unsigned long lo = m * static_cast<unsigned long>(ipow(p, r - 1).get_ui());
    const unsigned long hi = lo * p;
    if (hi > A.truncation()) {
      out.push_back(invalid_report("s_order", params, "index beyond truncation"));
      continue;
    }
    const CycloElem& a_lo = A[static_cast<unsigned>(lo)];
    const CycloElem& a_hi = A[static_cast<unsigned>(hi)];
    if (!is_p_integral(a_lo, p) || !is_p_integral(a_hi, p)) {
      out.push_back(invalid_report("s_order", params, "coefficient not p-integral"));
      continue;
    }
    out.push_back(make_report("s_order", params, val_of(frobenius_global(a_lo, p) - a_hi, ctx),
                              static_cast<int>(s * r)));
  }
  return out;
}

std::vector<CycloElem> dwork_q_extract(const Series& V, unsigned T) {
  const unsigned N = V.conductor();
  std::vector<CycloElem> q(T + 1, CycloElem(N));
  for (unsigned n = 1; n <= T; ++n) {
    CycloElem acc = V.coeff(n);
    for (unsigned m = 1; m < n; ++m) {
      if (n % m || q[m].is_zero()) continue;
      acc -= cyclo_pow(q[m], n / m) * Rational(m);
    }
    q[n] = acc * Rational(1, n);
  }
  return q;
}

Series dwork_reconstruct(const std::vector<CycloElem>& q, unsigned T) {
  const unsigned N = q.empty() ? 1 : q.front().conductor();
  Series s(N, T);
  for (unsigned n = 1; n < q.size() && n <= T; ++n) {
    if (q[n].is_zero()) continue;
    CycloElem power = q[n];
    for (unsigned k = 1; n * k <= T; ++k) {
      s.set(n * k, s[n * k] + power * Rational(1, k));
      power *= q[n];
    }
  }
  return s;
}

std::vector<CongruenceReport> dwork_checks(const Series& V, const LocalContextPtr& ctx, unsigned T) {
  const unsigned long p = ctx->p();
  const Series v = V.truncated(T);
  const Series iV = log_integrate(v);
  const Series Y = exp_series(iV);
  Params params{{"p", str(p)}, {"T", str(T)}};
  std::vector<CongruenceReport> out;

  out.push_back(make_report("dwork.integrality", params, min_valuation(Y.coeffs(), 0, ctx), 0));

  Series quotient = frob_substitute(Y, p) * exp_series(iV * Rational(-static_cast<long>(p)));
  out.push_back(make_report("dwork.frobenius", params, min_valuation(quotient.coeffs(), 1, ctx), 1));

  auto q = dwork_q_extract(v, T);
  out.push_back(make_report("dwork.q_integrality", params, min_valuation(q, 1, ctx), 0));
  return out;
}

std::vector<CongruenceReport> power_coeff_bound_check(const Series& V, const LocalContextPtr& ctx, unsigned long n,
                                                      unsigned m_max) {
  const unsigned long p = ctx->p();
  const Series Yn = exp_series(log_integrate(V.truncated(m_max)) * Rational(n));
  std::vector<CongruenceReport> out;
  const int on = ordl(n, p);
  for (unsigned m = 1; m <= m_max; ++m) {
    Params params{{"p", str(p)}, {"n", str(n)}, {"m", str(m)}};
    out.push_back(make_report("power_coeff", params, val_of(Yn[m], ctx), std::max(0, on - ordl(m, p))));
  }
  return out;
}

std::vector<CongruenceReport> harmonic_bounds(unsigned long p, unsigned long n) {
  if (n < 1) throw std::invalid_argument("harmonic_bounds: n must be >= 1");
  Rational h1 = 0, h2 = 0, h2odd = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    if (k % 2 == 1) h2odd += Rational(1, Integer(k) * k);
    if (k % p == 0) continue;
    h1 += Rational(1, k);
    h2 += Rational(1, Integer(k) * k);
  }
  const int on = ordl(n, p);
  const int eps = epsilon_p(p);
  Params params{{"p", str(p)}, {"n", str(n)}};
  std::vector<CongruenceReport> out;
  out.push_back(make_report("harmonic.sum1", params, PValuation::of_rational(h1, p), std::max(0, 2 * on - eps)));
  out.push_back(make_report("harmonic.sum2", params, PValuation::of_rational(h2, p),
                            std::max(0, on - eps + (p == 2 ? 1 : 0))));
  if (p == 2)
    out.push_back(make_report("harmonic.sum2_odd", params, PValuation::of_rational(h2odd, p), std::max(0, on - 1)));
  return out;
}

std::vector<CongruenceReport> wolstenholme_binomial(unsigned long p) {
  Params params{{"p", str(p)}};
  std::vector<CongruenceReport> out;
  if (p < 5) {
    out.push_back(skip_report("wolstenholme.harmonic", params, "needs p >= 5"));
    out.push_back(skip_report("wolstenholme.binomial", params, "needs p >= 5"));
    return out;
  }
  Rational h = 0;
  for (unsigned long k = 1; k < p; ++k) h += Rational(1, k);
  out.push_back(make_report("wolstenholme.harmonic", params, PValuation::of_rational(h, p), 2));
  Rational d(binomial(2 * p - 1, p - 1) - 1);
  out.push_back(make_report("wolstenholme.binomial", params, PValuation::of_rational(d, p), 3));
  return out;
}

CongruenceReport wolstenholme_general(const PeriodicSeq& a, const LocalContextPtr& ctx, unsigned long n) {
  const unsigned long p = ctx->p();
  const unsigned N = a.period();
  Params params{{"p", str(p)}, {"n", str(n)}, {"N", str(N)}};
  if (a.conductor() != ctx->conductor()) return invalid_report("wolstenholme", params, "conductor mismatch");
  for (const auto& v : a.values())
    if (!is_p_integral(v, p)) return invalid_report("wolstenholme", params, "sequence not p-integral");
  CycloElem sum(a.conductor());
  for (unsigned long k = 1; k <= n; ++k) {
    if (k % p == 0) continue;
    sum += (a[n - k] * a[k]) * Rational(Integer(1), Integer(k) * k);
  }
  const int strong = wolstenholme_bound(p, n, N, false);
  const int weak = wolstenholme_bound(p, n, N, true);
  PValuation obs = val_of(sum, ctx);
  CongruenceReport r = make_report("wolstenholme", params, obs, p == 2 ? weak : strong);
  if (p == 2)
    r.note = "full bound " + std::to_string(strong) + (obs.meets(strong) ? " met" : " not met");
  return r;
}

CongruenceReport main_theorem_check(const Series& V, unsigned N, const FramingParams& params,
                                    const LocalContextPtr& ctx, unsigned n) {
  const unsigned long p = ctx->p();
  Params ps{{"p", str(p)}, {"n", str(n)}, {"nu", to_string(params.nu)},
            {"sign", params.sign == Sign::Plus ? "+" : "-"}};
  if (p == 2 && n % 2 == 1) return skip_report("main", ps, "p = 2 with ord_2(n) = 0");
  if (N % p == 0) return skip_report("main", ps, "p divides the period N");
  if (params.nu.get_den() != 1) return invalid_report("main", ps, "nu must be an integer");
  if (static_cast<unsigned long>(n) * p > V.truncation()) return invalid_report("main", ps, "series truncated below p*n");
  if (!coeffs_p_integral(V, static_cast<unsigned>(n * p), p)) return invalid_report("main", ps, "series not p-integral");
  const int predicted = main_theorem_bound(p, n, N);
  FramingParams fp = params;
  if (fp.nu == 0) {
    CycloElem d = frobenius_global(V[n], p) - V[static_cast<unsigned>(n * p)];
    return make_report("main", ps, val_of(d, ctx), predicted);
  }
  CycloElem a_n = frame_coeff(fp, V, n);
  CycloElem a_pn = frame_coeff(fp, V, static_cast<unsigned>(n * p));
  return make_report("main", ps, val_of(frobenius_global(a_n, p) - a_pn, ctx), predicted);
}

namespace {

struct ReductionParts {
  CycloElem lhs;
  Series X;
  Series E;  // exp(nu p n int V)
  Series frobV;
  Series V;
};

ReductionParts reduction_parts(const Series& V, const Rational& nu, unsigned long p, unsigned n) {
  const unsigned T = static_cast<unsigned>(p * n);
  const Series v = V.truncated(T);
  FramingParams fp{Sign::Plus, nu, 1, 1, 0};
  CycloElem diff = frobenius_global(frame_coeff(fp, v, n), p) - frame_coeff(fp, v, T);
  CycloElem lhs = diff * ratio(2, Integer(p) * p * n * n);
  Series frobV = frob_substitute(v, p);
  Series X = frobV - v;
  Series E = exp_series(log_integrate(v) * Rational(nu * T));
  return {lhs, X, E, frobV, v};
}

}  // namespace

CongruenceReport reduction_identity_check(const Series& V, const Rational& nu, const LocalContextPtr& ctx,
                                          unsigned n) {
  const unsigned long p = ctx->p();
  Params ps{{"p", str(p)}, {"n", str(n)}, {"nu", to_string(nu)}};
  if (p == 2 && n % 2 == 1) return skip_report("reduction", ps, "p = 2 with ord_2(n) = 0");
  if (static_cast<unsigned long>(n) * p > V.truncation())
    return invalid_report("reduction", ps, "series truncated below p*n");
  if (!coeffs_p_integral(V, static_cast<unsigned>(n * p), p))
    return invalid_report("reduction", ps, "series not p-integral");
  const int predicted = reduction_bound(p, n);
  if (nu == 0) return make_report("reduction", ps, PValuation::at_least(static_cast<int>(ctx->precision())), predicted);
  const unsigned T = static_cast<unsigned>(p * n);
  auto parts = reduction_parts(V, nu, p, n);
  const Series I2 = log_integrate(log_integrate(parts.X));
  CycloElem bracket = (parts.V * parts.E * I2)[T] * Rational(nu);
  CongruenceReport r = make_report("reduction", ps, val_of(parts.lhs + bracket, ctx), predicted);
  r.note = "opposite sign gives " + val_of(parts.lhs - bracket, ctx).to_string();
  return r;
}

CongruenceReport reduction_lemma_check(const Series& V, const Rational& nu, const LocalContextPtr& ctx, unsigned n) {
  const unsigned long p = ctx->p();
  Params ps{{"p", str(p)}, {"n", str(n)}, {"nu", to_string(nu)}};
  if (p == 2 && n % 2 == 1) return skip_report("reduction_lemma", ps, "p = 2 with ord_2(n) = 0");
  if (static_cast<unsigned long>(n) * p > V.truncation())
    return invalid_report("reduction_lemma", ps, "series truncated below p*n");
  if (!coeffs_p_integral(V, static_cast<unsigned>(n * p), p))
    return invalid_report("reduction_lemma", ps, "series not p-integral");
  const int predicted = reduction_bound(p, n);
  if (nu == 0)
    return make_report("reduction_lemma", ps, PValuation::at_least(static_cast<int>(ctx->precision())), predicted);
  const unsigned T = static_cast<unsigned>(p * n);
  auto parts = reduction_parts(V, nu, p, n);
  const Series I3 = log_integrate(log_integrate(log_integrate(parts.X)));
  const Series dS = euler_delta(parts.frobV + parts.V);
  CycloElem bracket = (dS * parts.E * I3)[T] * Rational(nu);
  return make_report("reduction_lemma", ps, val_of(parts.lhs - bracket, ctx), predicted);
}

CongruenceReport fractional_theorem_check(const FramingParams& params, const Series& V, unsigned N,
                                          const LocalContextPtr& ctx, unsigned n) {
  const unsigned long p = ctx->p();
  Params ps{{"p", str(p)},
            {"n", str(n)},
            {"nu", to_string(params.nu)},
            {"sigma", str(params.sigma)},
            {"rho", str(params.rho)},
            {"sign", params.sign == Sign::Plus ? "+" : "-"}};
  try {
    validate_fractional(params);
  } catch (const std::invalid_argument& e) {
    return invalid_report("fractional", ps, e.what());
  }
  if (N % p == 0) return skip_report("fractional", ps, "p divides the period N");
  const Rational lead = params.nu * params.sigma * n / params.rho;
  if (p == 2 && lead != 0 && ord_p(lead, 2).value() == 0)
    return skip_report("fractional", ps, "p = 2 with ord_2(nu sigma n / rho) = 0");
  const unsigned long pn = p * n;
  if (pn % params.rho == 0 && params.sigma * (pn / params.rho) > V.truncation())
    return invalid_report("fractional", ps, "series truncated below sigma*p*n/rho");
  if (!coeffs_p_integral(V, params.sigma * static_cast<unsigned>(pn / params.rho), p))
    return invalid_report("fractional", ps, "series not p-integral");
  const int predicted = fractional_bound(p, n, params.rho, N);
  FramingParams fp = params;
  fp.weight = 3;
  CycloElem d = frobenius_global(fractional_coeff(fp, V, n), p) - fractional_coeff(fp, V, static_cast<unsigned>(pn));
  return make_report("fractional", ps, val_of(d, ctx), predicted);
}

CongruenceReport jk_check(unsigned long a, unsigned long b, unsigned long p, unsigned r) {
  Params ps{{"a", str(a)}, {"b", str(b)}, {"p", str(p)}, {"r", str(r)}};
  if (b > a || r < 1) return invalid_report("jk", ps, "needs 0 <= b <= a and r >= 1");
  const unsigned long lo = ipow(p, r - 1).get_ui();
  Integer d = binomial(a * lo * p, b * lo * p) - binomial(a * lo, b * lo);
  return make_report("jk", ps, PValuation::of_rational(Rational(d), p), 3 * static_cast<int>(r) - epsilon_p(p));
}

}  // namespace supercong
