// fu.hpp
//
// f_u(z) = sum_{n >= 1} z^n / (n + u) for |z| < 1.
//
// For rational u = p/q in [0, 1), with w = z^(1/q) and zeta_q = e^(2 pi i/q),
// the roots-of-unity filter gives
//
//   f_u(z) = -w^(-p) sum_{m=0}^{q-1} zeta_q^(-pm) log(1 - zeta_q^m w) - [p > 0] q/p.
//
// Other rational u are shifted into [0, 1) by peeling off finitely many terms.

#pragma once

#include "zx/mp/hreal.hpp"
#include "zx/mp/rational.hpp"

namespace zx::expl {

using mp::HComplex;
using mp::HReal;
using mp::Rational;

// Closed form for any rational u with n + u != 0 for all n >= 1.
// Throws std::domain_error for |z| >= 1 or a vanishing denominator.
HComplex f_u_closed(Rational const& u, HComplex const& z);

// Direct summation with a geometric remainder bound, for real u > -1.
HComplex f_u_series(HReal const& u, HComplex const& z);

// The variant with prefactor z^(+p/q) and no k = p correction. Kept only to
// demonstrate that it disagrees with the series.
HComplex f_u_uncorrected(Rational const& u, HComplex const& z);

}  // namespace zx::expl
