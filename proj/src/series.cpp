#include "supercong/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace supercong {

Series::Series(unsigned conductor, unsigned T) : conductor_(conductor), coeffs_(T + 1, CycloElem(conductor)) {}

Series::Series(unsigned conductor, std::vector<CycloElem> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Series needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (c.conductor() != conductor_) throw std::invalid_argument("Series: coefficient conductor mismatch");
}

Series Series::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<CycloElem> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.emplace_back(1, r);
  return Series(1, std::move(c));
}

Series Series::one(unsigned conductor, unsigned T) {
  Series s(conductor, T);
  s.coeffs_[0] = CycloElem(conductor, Rational(1));
  return s;
}

Series Series::variable(unsigned conductor, unsigned T) {
  Series s(conductor, T);
  if (T >= 1) s.coeffs_[1] = CycloElem(conductor, Rational(1));
  return s;
}

const CycloElem& Series::coeff(unsigned n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("coefficient " + std::to_string(n) + " beyond truncation " +
                            std::to_string(truncation()));
  return coeffs_[n];
}

void Series::set(unsigned n, CycloElem value) {
  if (n >= coeffs_.size()) throw std::out_of_range("Series::set beyond truncation");
  if (value.conductor() != conductor_) throw std::invalid_argument("Series::set: conductor mismatch");
  coeffs_[n] = std::move(value);
}

Series Series::truncated(unsigned T) const {
  Series r = *this;
  r.coeffs_.resize(T + 1, CycloElem(conductor_));
  return r;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloElem& c) { return c.is_zero(); });
}

void Series::require_same(const Series& b) const {
  if (conductor_ != b.conductor_) throw std::invalid_argument("Series: conductor mismatch");
}

Series& Series::operator+=(const Series& b) {
  require_same(b);
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()), CycloElem(conductor_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& b) {
  require_same(b);
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()), CycloElem(conductor_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const CycloElem& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.require_same(b);
  const unsigned T = std::min(a.truncation(), b.truncation());
  Series c(a.conductor_, T);
  for (unsigned i = 0; i <= T; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= T; ++j) c.coeffs_[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  return c;
}

Series operator-(Series a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const Series& a, const Series& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

Series euler_delta(const Series& F) {
  Series r = F;
  for (unsigned n = 0; n <= F.truncation(); ++n) r.set(n, F[n] * Rational(n));
  return r;
}

Series log_integrate(const Series& F) {
  if (!F[0].is_zero()) throw std::domain_error("log_integrate: nonzero constant term");
  Series r = F;
  for (unsigned n = 1; n <= F.truncation(); ++n) r.set(n, F[n] * Rational(1, n));
  return r;
}

Series exp_series(const Series& F) {
  if (!F[0].is_zero()) throw std::domain_error("exp_series: nonzero constant term");
  const unsigned T = F.truncation();
  const unsigned N = F.conductor();
  std::vector<CycloElem> kf(T + 1, CycloElem(N));
  for (unsigned k = 1; k <= T; ++k) kf[k] = F[k] * Rational(k);
  std::vector<CycloElem> e(T + 1, CycloElem(N));
  e[0] = CycloElem(N, Rational(1));
  for (unsigned n = 1; n <= T; ++n) {
    CycloElem acc(N);
    for (unsigned k = 1; k <= n; ++k)
      if (!kf[k].is_zero()) acc.add_product(kf[k], e[n - k]);
    e[n] = acc * Rational(1, n);
  }
  return Series(N, std::move(e));
}

Series log_series(const Series& F) {
  const unsigned N = F.conductor();
  if (F[0] != CycloElem(N, Rational(1))) throw std::domain_error("log_series: constant term must be 1");
  const unsigned T = F.truncation();
  std::vector<CycloElem> l(T + 1, CycloElem(N));
  for (unsigned n = 1; n <= T; ++n) {
    CycloElem acc = F[n] * Rational(n);
    for (unsigned k = 1; k < n; ++k)
      if (!l[k].is_zero()) acc -= (l[k] * Rational(k)) * F[n - k];
    l[n] = acc * Rational(1, n);
  }
  return Series(N, std::move(l));
}

Series series_inverse(const Series& F) {
  if (F[0].is_zero()) throw std::domain_error("series_inverse: zero constant term");
  const unsigned T = F.truncation();
  const unsigned N = F.conductor();
  std::vector<CycloElem> g(T + 1, CycloElem(N));
  const CycloElem g0 = F[0].inverse();
  g[0] = g0;
  for (unsigned n = 1; n <= T; ++n) {
    CycloElem acc(N);
    for (unsigned k = 1; k <= n; ++k)
      if (!F[k].is_zero()) acc.add_product(F[k], g[n - k]);
    g[n] = -(acc * g0);
  }
  return Series(N, std::move(g));
}

Series series_pow(const Series& F, unsigned e) {
  Series result = Series::one(F.conductor(), F.truncation());
  Series base = F;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Series compose(const Series& H, const Series& G) {
  if (!G[0].is_zero()) throw std::domain_error("compose: inner series has nonzero constant term");
  if (H.conductor() != G.conductor()) throw std::invalid_argument("compose: conductor mismatch");
  const unsigned T = std::min(H.truncation(), G.truncation());
  const Series g = G.truncated(T);
  Series r(H.conductor(), T);
  for (unsigned i = T + 1; i-- > 0;) {
    r = r * g;
    r.set(0, r[0] + H[i]);
  }
  return r;
}

Series reversion(const Series& F) {
  const unsigned T = F.truncation();
  const unsigned N = F.conductor();
  if (!F[0].is_zero()) throw std::domain_error("reversion: nonzero constant term");
  if (T >= 1 && F[1].is_zero()) throw std::domain_error("reversion: linear coefficient not invertible");
  const Series z = Series::variable(N, T);
  if (T <= 1) return z * F[1].inverse();
  // F' padded to truncation T; the missing top coefficient never reaches
  // the Newton correction because the residual vanishes through degree 1.
  Series deriv(N, T);
  for (unsigned n = 0; n < T; ++n) deriv.set(n, F[n + 1] * Rational(n + 1));
  Series G = z * F[1].inverse();
  for (int iter = 0; iter < 64; ++iter) {
    Series residual = compose(F, G) - z;
    if (residual.is_zero()) return G;
    G -= residual * series_inverse(compose(deriv, G));
  }
  throw std::logic_error("reversion: Newton iteration did not converge");
}

CycloElem lif_coeff(const Series& H, const Series& F, unsigned n) {
  const unsigned N = F.conductor();
  if (n < 1) throw std::invalid_argument("lif_coeff: n must be >= 1");
  if (!H[0].is_zero()) throw std::domain_error("lif_coeff: [H]_0 must vanish");
  if (!F[0].is_zero()) throw std::domain_error("lif_coeff: [F]_0 must vanish");
  if (n > H.truncation() || n > F.truncation()) throw std::out_of_range("lif_coeff: n beyond truncation");
  if (F[1].is_zero()) throw std::domain_error("lif_coeff: linear coefficient not invertible");
  // U = F/z; [U]_n is unknown at n = T but only meets [dH]_0 = 0.
  Series U(N, n);
  for (unsigned k = 0; k < n; ++k) U.set(k, F[k + 1]);
  Series W = series_pow(series_inverse(U), n);
  Series dH = euler_delta(H.truncated(n));
  CycloElem acc(N);
  for (unsigned k = 1; k <= n; ++k) acc.add_product(dH[k], W[n - k]);
  return acc * Rational(1, n);
}

Series cartier(const Series& F, unsigned k) {
  if (k == 0) throw std::invalid_argument("cartier: k must be >= 1");
  const unsigned T = F.truncation() / k;
  Series r(F.conductor(), T);
  for (unsigned n = 0; n <= T; ++n) r.set(n, F[n * k]);
  return r;
}

Series scaled_substitute(const Series& F, unsigned rho, unsigned s) {
  if (rho == 0) throw std::invalid_argument("scaled_substitute: rho must be >= 1");
  const Rational scale(ipow(rho, s));
  Series r(F.conductor(), F.truncation() * rho);
  for (unsigned n = 0; n <= F.truncation(); ++n) r.set(n * rho, F[n] * scale);
  return r;
}

Series frobenius_coeffs(const Series& F, unsigned long p) {
  Series r = F;
  for (unsigned n = 0; n <= F.truncation(); ++n) r.set(n, frobenius_global(F[n], p));
  return r;
}

}  // namespace supercong
