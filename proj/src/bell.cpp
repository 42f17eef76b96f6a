#include "supercong/bell.hpp"

#include <stdexcept>
#include <string>

namespace supercong {

namespace {

void require_range(unsigned n, unsigned k, const std::vector<CycloElem>& x) {
  if (k < 1 || k > n)
    throw std::invalid_argument("partial Bell polynomial needs 1 <= k <= n (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  if (x.size() < n - k + 1) throw std::invalid_argument("partial Bell polynomial: too few arguments");
}

struct Enumerator {
  const std::vector<CycloElem>& x;
  unsigned n;
  unsigned conductor;
  CycloElem total;
  std::vector<unsigned> alpha;

  // Parts of size >= i remain; `left` parts with total weight `weight`.
  void descend(unsigned i, unsigned left, unsigned weight) {
    if (left == 0) {
      if (weight == 0) add_term();
      return;
    }
    if (i > weight) return;
    // every remaining part has size >= i, so at most weight / i of them
    for (unsigned a = 0; a <= left && a * i <= weight; ++a) {
      alpha[i] = a;
      if (a == left || (left - a) * (i + 1) <= weight - a * i) descend(i + 1, left - a, weight - a * i);
    }
    alpha[i] = 0;
  }

  void add_term() {
    Integer denom = 1;
    CycloElem prod(conductor, Rational(1));
    for (unsigned i = 1; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      denom *= factorial(alpha[i]);
      Integer fi = factorial(i);
      Integer fpow;
      mpz_pow_ui(fpow.get_mpz_t(), fi.get_mpz_t(), alpha[i]);
      denom *= fpow;
      for (unsigned r = 0; r < alpha[i]; ++r) prod *= x[i - 1];
    }
    total += prod * ratio(factorial(n), denom);
  }
};

}  // namespace

CycloElem partial_bell_enumerate(unsigned n, unsigned k, const std::vector<CycloElem>& x) {
  require_range(n, k, x);
  const unsigned N = x.front().conductor();
  Enumerator e{x, n, N, CycloElem(N), std::vector<unsigned>(n - k + 2, 0)};
  e.descend(1, k, n);
  return e.total;
}

CycloElem partial_bell(unsigned n, unsigned k, const std::vector<CycloElem>& x) {
  require_range(n, k, x);
  BellTable table(x, n);
  return table(n, k);
}

BellTable::BellTable(const std::vector<CycloElem>& x, unsigned T)
    : T_(T), zero_(x.empty() ? 1 : x.front().conductor()) {
  const unsigned N = zero_.conductor();
  rows_.assign(T + 1, {});
  rows_[0] = {CycloElem(N, Rational(1))};
  for (unsigned n = 1; n <= T; ++n) {
    rows_[n].assign(n + 1, CycloElem(N));
    for (unsigned k = 1; k <= n; ++k) {
      CycloElem acc(N);
      for (unsigned i = 1; i <= n - k + 1; ++i) {
        const CycloElem& prev = (*this)(n - i, k - 1);
        if (prev.is_zero() || i > x.size() || x[i - 1].is_zero()) continue;
        acc.add_product(x[i - 1] * Rational(binomial(n - 1, i - 1)), prev);
      }
      rows_[n][k] = std::move(acc);
    }
  }
}

const CycloElem& BellTable::operator()(unsigned n, unsigned k) const {
  if (n > T_ || k > n) return zero_;
  return rows_[n][k];
}

std::vector<CycloElem> bell_transform(const BellParams& params, const std::vector<CycloElem>& x, unsigned T) {
  if (x.size() < T) throw std::invalid_argument("bell_transform: sequence shorter than T");
  if (T == 0) return {};
  const unsigned N = x.front().conductor();
  std::vector<CycloElem> bang(T, CycloElem(N));
  for (unsigned j = 1; j <= T; ++j) bang[j - 1] = x[j - 1] * Rational(factorial(j));
  BellTable table(bang, T);
  std::vector<CycloElem> y(T, CycloElem(N));
  for (unsigned n = 1; n <= T; ++n) {
    CycloElem acc(N);
    Rational weight = 1;  // prod_{j < k} (a n + b k + c j + d)
    for (unsigned k = 1; k <= n; ++k) {
      if (k > 1) {
        // the product depends on k through b k, so rebuild it
        weight = 1;
        for (unsigned j = 1; j < k; ++j) weight *= params.a * n + params.b * k + params.c * j + params.d;
      }
      if (weight == 0) continue;
      acc += table(n, k) * weight;
    }
    y[n - 1] = acc * Rational(Integer(1), factorial(n));
  }
  return y;
}

}  // namespace supercong
