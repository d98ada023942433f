// special.hpp
//
// Special functions at working precision with explicit error bounds.
//
// Gamma uses Stirling's series after raising the argument; Hurwitz zeta uses
// Euler-Maclaurin with Bernoulli terms through B_20 and a shift count chosen
// so that the remainder bound meets the requested error.

#pragma once

#include "zx/mp/hreal.hpp"
#include "zx/mp/rational.hpp"

#include <functional>
#include <optional>

namespace zx::mp {

// Exact Bernoulli number B_n (B_1 = -1/2). Cached; thread-safe.
Rational const& bernoulli(unsigned n);

// Gamma(x) for real x > 0. The default target is a relative error of
// 2^(16 - bits). Returned error is absolute.
Approx gamma_fn(HReal const& x, std::optional<HReal> rel_target = std::nullopt);
HReal log_gamma(HReal const& x);

// zeta(s, a) = sum_{n >= 0} (n + a)^(-s) for real s > 0, s != 1, a in (0, 1].
// `abs_target` defaults to 2^(-bits) * |leading term|.
Approx hurwitz_zeta(HReal const& s, HReal const& a, std::optional<HReal> abs_target = std::nullopt);

// zeta(j) for integer j >= 2.
HReal zeta_int(int j);

// zeta(s) for real s > 0, s != 1 (Hurwitz at a = 1).
HReal zeta_real(HReal const& s);

// Central-difference derivative of `f` at `s` with one Richardson step
// between h1 and h2 = h1/16. Throws std::runtime_error when the two raw
// differences disagree by more than `agree_tol`.
struct DerivativeEstimate {
  HReal value;        // extrapolated
  HReal raw_coarse;   // D(h1)
  HReal raw_fine;     // D(h2)
};
DerivativeEstimate central_derivative(std::function<HReal(HReal const&)> const& f, HReal const& s,
                                      HReal const& h1, HReal const& agree_tol);

// Digamma psi(x) = Gamma'(x)/Gamma(x) for real x, not a non-positive integer.
HReal digamma(HReal const& x);

// (zeta'/zeta)(s) for real s other than 1 and the trivial zeros. For s >= 1/2
// this differentiates (s - 1) zeta(s) numerically; smaller s go through the
// functional equation. s = 0 returns log(2 pi) exactly.
HReal zeta_log_derivative(HReal const& s);

}  // namespace zx::mp
