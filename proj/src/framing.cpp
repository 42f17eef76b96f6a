#include "supercong/framing.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "supercong/bell.hpp"

namespace supercong {

int sign_power(const Rational& e) {
  if (e.get_den() != 1)
    throw std::domain_error("(-1)^" + to_string(e) + " is undefined for non-integral exponent");
  return mpz_odd_p(e.get_num_mpz_t()) ? -1 : 1;
}

void validate_fractional(const FramingParams& params) {
  if (params.sigma == 0 || params.rho == 0) throw std::invalid_argument("sigma and rho must be positive");
  if (std::gcd(params.sigma, params.rho) != 1) throw std::invalid_argument("gcd(rho, sigma) must be 1");
  if (params.weight != 0 && params.weight != 2 && params.weight != 3)
    throw std::invalid_argument("weight must be 0, 2 or 3");
  Rational q = params.nu * params.sigma / params.rho;
  if (q.get_den() != 1) throw std::invalid_argument("nu * sigma / rho must be an integer");
}

Series frame(const FramingParams& params, const Series& V) {
  if (!V[0].is_zero()) throw std::domain_error("frame: V must have zero constant term");
  if (params.nu == 0) return V;
  const unsigned T = V.truncation();
  const Series iV = log_integrate(V);
  std::vector<CycloElem> x(iV.coeffs().begin() + 1, iV.coeffs().end());
  auto y = bell_transform({params.nu, 0, 0, 0}, x, T);
  Series out(V.conductor(), T);
  for (unsigned n = 1; n <= T; ++n) {
    CycloElem a = y[n - 1] * Rational(n);
    if (params.sign == Sign::Minus && sign_power(params.nu * n) < 0) a = -a;
    out.set(n, std::move(a));
  }
  return out;
}

CycloElem frame_coeff(const FramingParams& params, const Series& V, unsigned n) {
  if (params.nu == 0) throw std::invalid_argument("frame_coeff: nu = 0 has no coefficient formula; use frame");
  if (n > V.truncation()) throw std::out_of_range("frame_coeff: index beyond truncation");
  if (n == 0) return CycloElem(V.conductor());
  int twist = params.sign == Sign::Minus ? sign_power(params.nu * n) : 1;
  Series e = exp_series(log_integrate(V.truncated(n)) * Rational(params.nu * n));
  return e[n] * Rational(twist / params.nu);
}

Series frame_by_formula(const FramingParams& params, const Series& V, unsigned T) {
  if (params.nu == 0) return V.truncated(T);
  Series out(V.conductor(), T);
  for (unsigned n = 1; n <= T; ++n) out.set(n, frame_coeff(params, V, n));
  return out;
}

CycloElem fractional_coeff(const FramingParams& params, const Series& V, unsigned n) {
  validate_fractional(params);
  if (n == 0 || n % params.rho != 0) return CycloElem(V.conductor());
  const unsigned m = params.sigma * (n / params.rho);
  CycloElem a = params.nu == 0 ? V.coeff(m) : frame_coeff(params, V, m);
  return a * ratio(ipow(params.rho, params.weight), params.sigma);
}

Series fractional_frame(const FramingParams& params, const Series& V, unsigned T) {
  validate_fractional(params);
  if (static_cast<unsigned long>(params.sigma) * T / params.rho > V.truncation())
    throw std::out_of_range("fractional_frame: V truncated too early");
  Series out(V.conductor(), T);
  for (unsigned n = 1; n <= T; ++n) out.set(n, fractional_coeff(params, V, n));
  return out;
}

Series functional_equation_residual(const Series& V, const Rational& nu, unsigned T, Sign sign) {
  const Series v = V.truncated(T);
  const Series iV = log_integrate(v);
  FramingParams params{sign, nu, 1, 1, 0};
  const Series framed = log_integrate(frame(params, v));
  Series inner = Series::variable(V.conductor(), T) * exp_series(iV * Rational(-nu));
  if (sign == Sign::Minus && sign_power(nu) < 0) inner = -inner;
  return compose(framed, inner) - iV;
}

}  // namespace supercong
