#include "supercong/cyclo.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace supercong {

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly to_rpoly(const IntPoly& p) {
  RPoly r;
  r.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) r.emplace_back(c);
  return r;
}

// Division with remainder in Q[x]; b nonzero.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {{}, a};
  RPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    Rational c = a[i] / b.back();
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

RPoly sub(const RPoly& a, const RPoly& b) {
  RPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

}  // namespace

CycloElem::CycloElem(unsigned conductor) : conductor_(conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be >= 1");
  coeffs_.resize(euler_phi(conductor));
}

CycloElem::CycloElem(unsigned conductor, Rational value) : CycloElem(conductor) {
  value.canonicalize();
  coeffs_[0] = std::move(value);
}

CycloElem::CycloElem(unsigned conductor, std::vector<Rational> coords) : CycloElem(conductor) {
  for (auto& c : coords) c.canonicalize();
  reduce(coords);
  for (std::size_t i = 0; i < coords.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coords[i]);
}

CycloElem CycloElem::zeta(unsigned conductor, long long power) {
  long long e = power % static_cast<long long>(conductor);
  if (e < 0) e += conductor;
  std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
  v[static_cast<std::size_t>(e)] = 1;
  return CycloElem(conductor, std::move(v));
}

void CycloElem::reduce(std::vector<Rational>& v) const {
  const std::size_t phi = coeffs_.size();
  if (v.size() <= phi) return;
  const IntPoly& cyc = cyclotomic_poly(conductor_);
  for (std::size_t i = v.size(); i-- > phi;) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    for (std::size_t j = 0; j <= phi; ++j) v[i - phi + j] -= c * cyc.coeffs[j];
  }
  v.resize(phi);
}

void CycloElem::require_same(const CycloElem& b) const {
  if (conductor_ != b.conductor_)
    throw std::invalid_argument("conductor mismatch: " + std::to_string(conductor_) + " vs " +
                                std::to_string(b.conductor_));
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycloElem& CycloElem::operator+=(const CycloElem& b) {
  require_same(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& b) {
  require_same(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& b) {
  require_same(b);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  reduce(prod);
  coeffs_ = std::move(prod);
  return *this;
}

void CycloElem::add_product(const CycloElem& a, const CycloElem& b) {
  require_same(a);
  if (coeffs_.size() == 1) {
    a.require_same(b);
    mpq_class t = a.coeffs_[0] * b.coeffs_[0];
    coeffs_[0] += t;
    return;
  }
  *this += a * b;
}

CycloElem operator-(CycloElem a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(conductor_) + ")");
  if (coeffs_.size() == 1) return CycloElem(conductor_, Rational(1) / coeffs_[0]);
  // extended Euclid: s*a + t*Phi = 1 in Q[x]
  RPoly r0 = coeffs_, r1 = to_rpoly(cyclotomic_poly(conductor_));
  trim(r0);
  RPoly s0{Rational(1)}, s1{};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible
  Rational inv = Rational(1) / r0[0];
  for (auto& c : s0) c *= inv;
  return CycloElem(conductor_, std::move(s0));
}

std::string CycloElem::to_string() const {
  if (coeffs_.size() == 1) return supercong::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << supercong::to_string(coeffs_[i]) << ")";
    if (i > 0) os << "*z" << conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElem& a) { return os << a.to_string(); }

CycloElem frobenius_global(const CycloElem& a, unsigned long p) {
  const unsigned N = a.conductor();
  if (std::gcd(p, static_cast<unsigned long>(N)) != 1)
    throw std::domain_error("frobenius_global: p = " + std::to_string(p) + " divides conductor " +
                            std::to_string(N));
  if (N == 1) return a;
  std::vector<Rational> v(N);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (a[i] == 0) continue;
    v[(i * (p % N)) % N] += a[i];
  }
  return CycloElem(N, std::move(v));
}

Integer common_denominator(const CycloElem& a) {
  Integer d = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

}  // namespace supercong
