// zeta_rhs.hpp
//
// Closed-form sides of the explicit formulas for the Riemann zeta function.
// Every argument is an exact rational, so the half-weight at prime powers
// is applied consistently in psi_0, T and L.

#pragma once

#include "zx/explicit/pf.hpp"

namespace zx::expl {

// x - psi_0(x) - log 2pi - (1/2) log(1 - 1/x^2); predicts sum_rho x^rho / rho. x > 1.
HReal f_rhs_gt1(Rational const& x);

// T(x, 0) + log x + gamma - (1/2) log((1 + x)/(1 - x)) + x; predicts sum_rho x^rho / rho. 0 < x < 1.
HReal f_rhs_lt1(Rational const& x);

// L(x) = sum'_{n <= x} Lambda(n)/n. x > 1.
HReal L_sum(Rational const& x);

// Predicted value of sum_{gamma > 0} 2 cos(gamma log x) / (1/4 + gamma^2), x > 1, assuming
// every zero is on the critical line.
enum class CosineRoute { via_L, via_f };
HReal cosine_rhs(Rational const& x, CosineRoute route = CosineRoute::via_L);

// 1 + x(L(x) - log x) + x - psi_0(x) - (x/2) log((x+1)/(x-1)) - (1/2) log(1 - 1/x^2).
// sum_rho x^rho/(rho(1 - rho)) = S_rhs_gt1(x) + gamma x - log 2pi. x > 1.
HReal S_rhs_gt1(Rational const& x);

// sum_i lambda_i [x/(1 - a_i) - psi_0(x, a_i) + (1/2) f_{a_i/2}(x^-2)];
// predicts sum_rho (A/B)(rho) x^rho + sum_i lambda_i (zeta'/zeta)(a_i) x^(a_i).
// Roots 1, -2, -4, ... are rejected. x > 1.
HReal general_rhs_gt1(Rational const& x, RationalFunctionPF const& pf);

// sum_i lambda_i [T(x, a_i) - 1/a_i - (x/2) f_{(1 - a_i)/2}(x^2)];
// predicts sum_rho (A/B)(rho) x^rho - sum_i lambda_i (zeta'/zeta)(1 - a_i) x^(a_i).
// Roots 0, 1, 3, 5, ... are rejected. 0 < x < 1.
HReal general_rhs_lt1(Rational const& x, RationalFunctionPF const& pf);

// sum_{n >= 1} x^(-2n)/(2n + a) for x > 1, and sum_{n >= 1} x^(2n+1)/(2n + 1 - a) for 0 <= x < 1.
HReal trivial_series_gt1(Rational const& x, Rational const& a);
HReal trivial_series_lt1(Rational const& x, Rational const& a);

}  // namespace zx::expl
