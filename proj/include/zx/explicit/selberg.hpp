// selberg.hpp
//
// Descriptors for L-functions of Selberg type and the closed-form sides of
// their explicit formulas.
//
// A descriptor records the completed-function data
//
//   Phi(s) = s^m (s - 1)^m Q^s prod_j Gamma(lambda_j s + mu_j) F(s),   Phi(s) = w conj(Phi(1 - conj(s))),
//
// together with Lambda_F(n) = b_F(n) log n on prime powers.

#pragma once

#include "zx/arith/characters.hpp"
#include "zx/mp/hreal.hpp"
#include "zx/mp/rational.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zx::expl {

using mp::HComplex;
using mp::HReal;
using mp::Rational;

struct GammaFactor {
  Rational lambda;
  Rational mu;
};

// Lambda_F(p^k) given p, k and log p.
using CoefficientFn = std::function<HComplex(std::uint64_t p, unsigned k, HReal const& log_p)>;
// (F'/F)(s) for real s.
using LogDerivativeFn = std::function<HComplex(HReal const& s)>;

struct SelbergDescriptor {
  std::string label;
  std::string dual_label;  // label of the table holding the zeros of conj(F)
  unsigned m_F = 0;
  HReal Q = 1;
  std::vector<GammaFactor> gamma_factors;
  HComplex w = HComplex(HReal(1));
  std::string coefficient_source;  // "builtin:zeta" or "dirichlet:q,index"
  CoefficientFn coefficients;
  bool real_coefficients = true;
  std::optional<HComplex> gamma_F;  // constant term: -F'/F(s) = m/(s - 1) - gamma_F + O(s - 1)
  LogDerivativeFn log_derivative;   // may be empty

  HReal d_F() const;
  HReal q_F() const;
  HReal theta_F() const;
  // Throws std::domain_error on lambda_j <= 0, mu_j < 0, Q <= 0, |w| != 1,
  // missing coefficients, or (arithmetic) a conductor far from an integer.
  void validate(bool arithmetic = true) const;
};

SelbergDescriptor descriptor_zeta();
// Throws std::domain_error for imprimitive characters.
SelbergDescriptor descriptor_dirichlet(arith::DirichletCharacter const& chi);

// Key-value descriptor files; see docs/descriptor-format.md.
SelbergDescriptor parse_descriptor(std::istream& in);
SelbergDescriptor load_descriptor_file(std::string const& path);

// x^a sum_{n <= x} Lambda_F(n) n^(-a), last term halved when x is a prime power. x > 1.
HComplex psi0_F(Rational const& x, Rational const& alpha, SelbergDescriptor const& F);
// x^a sum_{n <= 1/x} Lambda_F(n) n^(a - 1), last term halved when 1/x is a prime power. 0 < x < 1.
HComplex T_F(Rational const& x, Rational const& alpha, SelbergDescriptor const& F);

// Predicts sum_rho x^rho/(rho - a) + x^a (F'/F)(a). x > 1.
HComplex selberg_rhs_gt1(Rational const& x, Rational const& alpha, SelbergDescriptor const& F);

// a != 0: predicts sum_rho x^rho/(rho - a) - x^a (F'/F)(1 - a).
// a == 0: predicts sum_rho x^rho/rho and needs gamma_F (or, when m_F = 0, a log-derivative).
// Zeros are those of conj(F). 0 < x < 1.
HComplex selberg_rhs_lt1(Rational const& x, Rational const& alpha, SelbergDescriptor const& F);

}  // namespace zx::expl
