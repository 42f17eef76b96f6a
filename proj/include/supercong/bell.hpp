#pragma once

// Evaluated partial Bell polynomials B_{n,k}(x_1, ..., x_{n-k+1}) and the
// Bell transformations Y_{a,b,c,d} acting on sequences.

#include <vector>

#include "supercong/cyclo.hpp"

namespace supercong {

/// x[i - 1] holds x_i. Requires 1 <= k <= n and x.size() >= n - k + 1.
/// Sum over multi-indices alpha with sum alpha_i = k, sum i*alpha_i = n.
CycloElem partial_bell_enumerate(unsigned n, unsigned k, const std::vector<CycloElem>& x);

/// Same value through B_{n,k} = sum_i binom(n-1, i-1) x_i B_{n-i,k-1}.
CycloElem partial_bell(unsigned n, unsigned k, const std::vector<CycloElem>& x);

/// All B_{n,k}(x) for 0 <= k <= n <= T by the recurrence.
class BellTable {
 public:
  BellTable(const std::vector<CycloElem>& x, unsigned T);
  /// B_{n,k}; zero outside 0 <= k <= n <= T except B_{0,0} = 1.
  const CycloElem& operator()(unsigned n, unsigned k) const;
  unsigned size() const { return T_; }

 private:
  unsigned T_;
  std::vector<std::vector<CycloElem>> rows_;
  CycloElem zero_;
};

struct BellParams {
  Rational a, b, c, d;
};

/// y_n = (1/n!) sum_{k=1}^{n} prod_{j=1}^{k-1} (a n + b k + c j + d) B_{n,k}(1! x_1, 2! x_2, ...)
/// for n = 1..T; x[i - 1] holds x_i and must have at least T entries.
std::vector<CycloElem> bell_transform(const BellParams& params, const std::vector<CycloElem>& x, unsigned T);

}  // namespace supercong
