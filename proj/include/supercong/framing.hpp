#pragma once

// Framing operators V -> V^{(+-,nu)} on zK[[z]] and their fractional
// variants (1/sigma) eps^{(s)}_rho C_sigma V^{(+-,nu)}.

#include "supercong/series.hpp"

namespace supercong {

enum class Sign { Plus, Minus };

struct FramingParams {
  Sign sign = Sign::Plus;
  Rational nu = 0;
  unsigned sigma = 1;
  unsigned rho = 1;
  unsigned weight = 0;  // s in {0, 2, 3}; 0 means no rescaling
};

/// V^{(+-,nu)} through the Bell pipeline  delta . G . Y_{nu,0,0,0} . [.]_n . int.
/// Uses sign and nu only; nu = 0 returns V.
Series frame(const FramingParams& params, const Series& V);
/// a_n^{+-} = ((-1)^{nu n} / nu) [exp(nu n int V)]_n. Requires nu != 0 and n <= truncation.
CycloElem frame_coeff(const FramingParams& params, const Series& V, unsigned n);
/// All a_1..a_T through frame_coeff (a_0 = 0).
Series frame_by_formula(const FramingParams& params, const Series& V, unsigned T);
/// n-th coefficient of the fractional framing: (rho^s / sigma) a_{sigma n / rho} when rho | n, else 0.
CycloElem fractional_coeff(const FramingParams& params, const Series& V, unsigned n);
/// Fractional framing to truncation T; V must reach sigma*T/rho.
Series fractional_frame(const FramingParams& params, const Series& V, unsigned T);
/// int V^{(+-,nu)}(z u(z)) - int V with u = exp(-nu int V), times (-1)^nu for the minus sign.
/// The zero series certifies the functional equation.
Series functional_equation_residual(const Series& V, const Rational& nu, unsigned T, Sign sign = Sign::Plus);

/// (-1)^{e} for an integral rational e; throws std::domain_error otherwise.
int sign_power(const Rational& e);

/// Checks gcd(rho, sigma) = 1, nu * sigma / rho integral and s in {0, 2, 3}.
void validate_fractional(const FramingParams& params);

}  // namespace supercong
