#include "supercong/local.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace supercong {

using modpoly::Poly;

// ---------------------------------------------------------------------------
// PValuation

PValuation PValuation::of_rational(const Rational& r, unsigned long p) {
  auto v = ord_p(r, p);
  if (!v) return zero();
  return *v < 0 ? non_integral(*v) : finite(*v);
}

bool PValuation::meets(int bound) const {
  switch (kind) {
    case Kind::Zero:
      return true;
    default:
      return value >= bound;
  }
}

std::string PValuation::kind_name() const {
  switch (kind) {
    case Kind::Finite:
      return "finite";
    case Kind::AtLeast:
      return "at_least";
    case Kind::NonIntegral:
      return "non_integral";
    case Kind::Zero:
      return "zero";
  }
  return "?";
}

std::string PValuation::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
    case Kind::NonIntegral:
      return std::to_string(value) + " (non-integral)";
    case Kind::Zero:
      return "inf";
  }
  return "?";
}

PValuation min(const PValuation& a, const PValuation& b) {
  auto key = [](const PValuation& v) {
    if (v.kind == PValuation::Kind::Zero) return std::pair{INT_MAX, 2};
    return std::pair{v.value, v.kind == PValuation::Kind::AtLeast ? 1 : 0};
  };
  return key(b) < key(a) ? b : a;
}

// ---------------------------------------------------------------------------
// factoring Phi_N mod p (equal-degree splitting) and Hensel lifting

namespace {

Poly random_poly(std::size_t deg_bound, const Integer& p, std::mt19937_64& rng) {
  Poly a(deg_bound);
  unsigned long pp = p.get_ui();
  std::uniform_int_distribution<unsigned long> dist(0, pp - 1);
  for (auto& c : a) c = dist(rng);
  modpoly::normalize(a, p);
  return a;
}

void split_equal_degree(const Poly& g, unsigned d, const Integer& p, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer exponent;
  if (p != 2) {
    Integer q = ipow(p.get_ui(), d);
    exponent = (q - 1) / 2;
  }
  for (;;) {
    Poly a = random_poly(n, p, rng);
    if (a.size() < 2) continue;
    Poly w;
    if (p == 2) {
      // absolute trace a + a^2 + ... + a^(2^(d-1)) mod g
      Poly term = modpoly::rem_monic(a, g, p);
      w = term;
      for (unsigned i = 1; i < d; ++i) {
        term = modpoly::rem_monic(modpoly::mul(term, term, p), g, p);
        w = modpoly::add(w, term, p);
      }
    } else {
      w = modpoly::sub(modpoly::powmod(a, exponent, g, p), Poly{Integer(1)}, p);
    }
    Poly h = modpoly::gcd_field(g, w, p);
    if (h.size() <= 1 || h.size() == g.size()) continue;
    Poly rest = modpoly::divmod_monic(g, h, p).first;
    split_equal_degree(h, d, p, rng, out);
    split_equal_degree(rest, d, p, rng, out);
    return;
  }
}

}  // namespace

std::vector<Poly> factor_cyclotomic_mod_p(unsigned N, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (std::gcd(p, static_cast<unsigned long>(N)) != 1)
    throw std::domain_error("p = " + std::to_string(p) + " divides N = " + std::to_string(N) + " (ramified)");
  const Integer P(p);
  const unsigned f = multiplicative_order(p, N);
  Poly phi = modpoly::reduce(cyclotomic_poly(N), P);
  std::vector<Poly> factors;
  std::mt19937_64 rng(0x5eed ^ (static_cast<std::uint64_t>(N) << 20) ^ p);
  split_equal_degree(phi, f, P, rng, factors);
  std::sort(factors.begin(), factors.end());
  return factors;
}

LocalContextPtr LocalContext::lift(unsigned N, unsigned long p, unsigned M, Poly factor) {
  if (M < 1) throw std::invalid_argument("precision must be >= 1");
  auto ctx = std::shared_ptr<LocalContext>(new LocalContext());
  ctx->p_ = p;
  ctx->conductor_ = N;
  ctx->precision_ = M;
  ctx->f_ = static_cast<unsigned>(factor.size() - 1);
  ctx->modulus_ = ipow(p, M);
  ctx->factor_mod_p_ = factor;

  const Integer P(p);
  const Integer& target = ctx->modulus_;
  const IntPoly& phi = cyclotomic_poly(N);
  Poly g = factor;
  Poly h = modpoly::divmod_monic(modpoly::reduce(phi, P), g, P).first;
  if (h.size() <= 1) {
    ctx->ghat_ = modpoly::reduce(phi, target);
    ctx->cofactor_ = Poly{Integer(1)};
  } else {
    auto bez = modpoly::gcdext_field(g, h, P);  // s*g + t*h = 1
    Poly s = bez.s, t = bez.t;
    Integer m = P;
    while (m < target) {
      Integer m2 = m * m;
      if (m2 > target) m2 = target;
      Poly fpoly = modpoly::reduce(phi, m2);
      Poly e = modpoly::sub(fpoly, modpoly::mul(g, h, m2), m2);
      auto [q, r] = modpoly::divmod_monic(modpoly::mul(s, e, m2), h, m2);
      Poly g2 = modpoly::add(g, modpoly::add(modpoly::mul(t, e, m2), modpoly::mul(q, g, m2), m2), m2);
      Poly h2 = modpoly::add(h, r, m2);
      Poly b = modpoly::sub(modpoly::add(modpoly::mul(s, g2, m2), modpoly::mul(t, h2, m2), m2), Poly{Integer(1)}, m2);
      auto [c, d] = modpoly::divmod_monic(modpoly::mul(s, b, m2), h2, m2);
      s = modpoly::sub(s, d, m2);
      t = modpoly::sub(t, modpoly::add(modpoly::mul(t, b, m2), modpoly::mul(c, g2, m2), m2), m2);
      g = std::move(g2);
      h = std::move(h2);
      m = m2;
    }
    ctx->ghat_ = g;
    ctx->cofactor_ = h;
  }
  if (ctx->ghat_.size() != ctx->f_ + 1 || ctx->ghat_.back() != 1)
    throw std::logic_error("Hensel lifting lost monicity");
  ctx->x_to_p_ = modpoly::powmod(Poly{Integer(0), Integer(1)}, Integer(p), ctx->ghat_, target);
  return ctx;
}

LocalContextPtr make_local_context(unsigned N, unsigned long p, unsigned M) {
  auto factors = factor_cyclotomic_mod_p(N, p);
  return LocalContext::lift(N, p, M, factors.front());
}

std::vector<LocalContextPtr> make_all_local_contexts(unsigned N, unsigned long p, unsigned M) {
  std::vector<LocalContextPtr> out;
  for (auto& g : factor_cyclotomic_mod_p(N, p)) out.push_back(LocalContext::lift(N, p, M, g));
  return out;
}

LocalContextPtr LocalContext::with_precision(unsigned M) const {
  return lift(conductor_, p_, M, factor_mod_p_);
}

// ---------------------------------------------------------------------------
// LocalElem

LocalElem::LocalElem(LocalContextPtr ctx, std::vector<Integer> residues) : ctx_(std::move(ctx)) {
  if (residues.size() > ctx_->f_) {
    residues_ = from_poly(*ctx_, std::move(residues));
  } else {
    residues.resize(ctx_->f_);
    for (auto& r : residues) r = mod_floor(r, ctx_->modulus_);
    residues_ = std::move(residues);
  }
}

std::vector<Integer> LocalElem::from_poly(const LocalContext& ctx, Poly r) {
  r = modpoly::rem_monic(std::move(r), ctx.ghat_, ctx.modulus_);
  r.resize(ctx.f_);
  return r;
}

void LocalElem::require_same(const LocalElem& b) const {
  if (ctx_ != b.ctx_) throw std::invalid_argument("local elements from different contexts");
}

bool LocalElem::is_zero() const {
  return std::all_of(residues_.begin(), residues_.end(), [](const Integer& c) { return c == 0; });
}

LocalElem LocalElem::operator+(const LocalElem& b) const {
  require_same(b);
  std::vector<Integer> r(residues_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(residues_[i] + b.residues_[i], ctx_->modulus_);
  return LocalElem(ctx_, std::move(r));
}

LocalElem LocalElem::operator-(const LocalElem& b) const {
  require_same(b);
  std::vector<Integer> r(residues_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(residues_[i] - b.residues_[i], ctx_->modulus_);
  return LocalElem(ctx_, std::move(r));
}

LocalElem LocalElem::operator*(const LocalElem& b) const {
  require_same(b);
  return LocalElem(ctx_, from_poly(*ctx_, modpoly::mul(residues_, b.residues_, ctx_->modulus_)));
}

bool operator==(const LocalElem& a, const LocalElem& b) {
  return a.ctx_ == b.ctx_ && a.residues_ == b.residues_;
}

LocalElem LocalElem::frobenius() const {
  const Integer& m = ctx_->modulus_;
  Poly acc;
  for (std::size_t i = residues_.size(); i-- > 0;) {
    acc = modpoly::rem_monic(modpoly::mul(acc, ctx_->x_to_p_, m), ctx_->ghat_, m);
    acc = modpoly::add(acc, Poly{residues_[i]}, m);
  }
  return LocalElem(ctx_, from_poly(*ctx_, std::move(acc)));
}

LocalElem embed(const CycloElem& a, const LocalContextPtr& ctx) {
  if (a.conductor() != ctx->conductor())
    throw std::invalid_argument("embed: conductor mismatch");
  const Integer& m = ctx->modulus();
  Poly r(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const Rational& c = a[i];
    Integer den(c.get_den());
    if (mpz_divisible_ui_p(den.get_mpz_t(), ctx->p()))
      throw std::domain_error("not p-integral at p = " + std::to_string(ctx->p()) + ": " + a.to_string());
    r[i] = mod_floor(Integer(c.get_num()) * inverse_mod(den, m), m);
  }
  modpoly::normalize(r, m);
  LocalElem e(ctx, {});
  e.residues_ = LocalElem::from_poly(*ctx, std::move(r));
  return e;
}

PValuation valuation(const LocalElem& e) {
  const auto& ctx = e.context();
  int best = -1;
  for (const auto& r : e.residues()) {
    if (r == 0) continue;
    int v = ord_p(r, ctx.p());
    if (best < 0 || v < best) best = v;
  }
  if (best < 0) return PValuation::at_least(static_cast<int>(ctx.precision()));
  return PValuation::finite(best);
}

PValuation val_of(const CycloElem& a, const LocalContextPtr& ctx) {
  const int M = static_cast<int>(ctx->precision());
  if (a.is_zero()) return PValuation::at_least(M);
  int k = 0;
  for (const auto& c : a.coeffs()) {
    if (c == 0) continue;
    k = std::max(k, ord_p(Integer(c.get_den()), ctx->p()));
  }
  if (k == 0) return valuation(embed(a, ctx));
  CycloElem scaled = a * Rational(ipow(ctx->p(), static_cast<unsigned>(k)));
  auto wide = ctx->with_precision(static_cast<unsigned>(M + k));
  PValuation v = valuation(embed(scaled, wide));
  if (v.kind == PValuation::Kind::AtLeast) return PValuation::at_least(M);
  int w = v.value - k;
  return w < 0 ? PValuation::non_integral(w) : PValuation::finite(w);
}

}  // namespace supercong
