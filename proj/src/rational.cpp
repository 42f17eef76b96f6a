#include "supercong/rational.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace supercong {

int ord_p(const Integer& x, unsigned long p) {
  if (x == 0) throw std::domain_error("ord_p of zero");
  if (p < 2) throw std::invalid_argument("ord_p: p must be >= 2");
  Integer y = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::optional<int> ord_p(const Rational& x, unsigned long p) {
  if (x == 0) return std::nullopt;
  return ord_p(Integer(x.get_num()), p) - ord_p(Integer(x.get_den()), p);
}

int ord_p(long long x, unsigned long p) {
  if (x == 0) throw std::domain_error("ord_p of zero");
  if (x < 0) x = -x;
  int v = 0;
  while (static_cast<unsigned long long>(x) % p == 0) {
    x /= static_cast<long long>(p);
    ++v;
  }
  return v;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

const Integer& factorial(unsigned n) {
  // deque keeps references stable while the table grows
  static std::deque<Integer> table{Integer(1)};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[n];
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ipow(unsigned long p, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace supercong
