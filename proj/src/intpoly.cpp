#include "supercong/intpoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace supercong {

IntPoly::IntPoly(std::vector<Integer> c) : coeffs(std::move(c)) { normalize(); }

void IntPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntPoly(std::move(c));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("divide_exact: not divisible");
  }
  std::vector<Integer> r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  std::vector<Integer> q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    Integer c = r[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) throw std::domain_error("divide_exact: not divisible");
  return IntPoly(std::move(q));
}

const IntPoly& cyclotomic_poly(unsigned N) {
  if (N == 0) throw std::invalid_argument("cyclotomic_poly: N must be >= 1");
  static std::map<unsigned, IntPoly> cache;
  static std::recursive_mutex mutex;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  std::vector<Integer> c(N + 1);
  c[0] = -1;
  c[N] = 1;
  IntPoly r(std::move(c));
  for (unsigned d = 1; d < N; ++d)
    if (N % d == 0) r = divide_exact(r, cyclotomic_poly(d));
  return cache.emplace(N, std::move(r)).first->second;
}

unsigned euler_phi(unsigned N) {
  unsigned result = N;
  unsigned n = N;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned multiplicative_order(unsigned long p, unsigned N) {
  if (std::gcd(p, static_cast<unsigned long>(N)) != 1)
    throw std::domain_error("multiplicative_order: p and N not coprime");
  if (N == 1) return 1;
  unsigned long x = p % N;
  unsigned f = 1;
  while (x != 1) {
    x = (x * p) % N;
    ++f;
  }
  return f;
}

namespace modpoly {

void normalize(Poly& a, const Integer& m) {
  for (auto& c : a) c = mod_floor(c, m);
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPoly& a, const Integer& m) {
  Poly r = a.coeffs;
  normalize(r, m);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Integer& m) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  normalize(c, m);
  return c;
}

Poly sub(const Poly& a, const Poly& b, const Integer& m) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  normalize(c, m);
  return c;
}

Poly mul(const Poly& a, const Poly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  normalize(c, m);
  return c;
}

std::pair<Poly, Poly> divmod_monic(Poly a, const Poly& b, const Integer& m) {
  if (b.empty() || b.back() != 1) throw std::invalid_argument("divmod_monic: divisor not monic");
  normalize(a, m);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {{}, a};
  Poly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = mod_floor(a[i], m);
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  normalize(a, m);
  normalize(q, m);
  return {q, a};
}

Poly rem_monic(Poly a, const Poly& b, const Integer& m) {
  return divmod_monic(std::move(a), b, m).second;
}

Poly make_monic_field(Poly a, const Integer& p) {
  normalize(a, p);
  if (a.empty()) return a;
  Integer inv = inverse_mod(a.back(), p);
  for (auto& c : a) c = mod_floor(c * inv, p);
  return a;
}

std::pair<Poly, Poly> divmod_field(Poly a, const Poly& b, const Integer& p) {
  if (b.empty()) throw std::domain_error("divmod_field: division by zero polynomial");
  Integer inv = inverse_mod(b.back(), p);
  Poly bm = b;
  for (auto& c : bm) c = mod_floor(c * inv, p);
  auto [q, r] = divmod_monic(std::move(a), bm, p);
  for (auto& c : q) c = mod_floor(c * inv, p);
  normalize(q, p);
  return {q, r};
}

Poly gcd_field(Poly a, Poly b, const Integer& p) {
  normalize(a, p);
  normalize(b, p);
  while (!b.empty()) {
    Poly r = divmod_field(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic_field(std::move(a), p);
}

Bezout gcdext_field(const Poly& a, const Poly& b, const Integer& p) {
  Poly r0 = a, r1 = b;
  normalize(r0, p);
  normalize(r1, p);
  Poly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod_field(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  Integer inv = inverse_mod(r0.back(), p);
  auto scale = [&](Poly& x) {
    for (auto& c : x) c = mod_floor(c * inv, p);
    normalize(x, p);
  };
  scale(r0);
  scale(s0);
  scale(t0);
  return {r0, s0, t0};
}

Poly powmod(Poly base, Integer e, const Poly& mod_poly, const Integer& m) {
  Poly result = rem_monic(Poly{Integer(1)}, mod_poly, m);
  base = rem_monic(std::move(base), mod_poly, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem_monic(mul(result, base, m), mod_poly, m);
    e >>= 1;
    if (e > 0) base = rem_monic(mul(base, base, m), mod_poly, m);
  }
  return result;
}

}  // namespace modpoly

}  // namespace supercong
