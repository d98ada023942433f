// chowla.hpp
//
// L(1, chi_{-d}), its derivative, and the Chowla-Selberg evaluation
//
//   exp(L'/L(1, chi) - gamma) = 2 pi prod_{a=1}^{D} Gamma(a/D)^(-chi(a) w / 2h).

#pragma once

#include "zx/arith/characters.hpp"
#include "zx/mp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zx::analysis {

using mp::HReal;
using mp::Rational;

// L(1, chi_{-d}) for squarefree d >= 1.
HReal L_one_chi(std::uint64_t d);

struct DerivativeReport {
  HReal value;   // Richardson value
  HReal coarse;  // central difference at step h
  HReal fine;    // at h / 16
};

// L'(1, chi_{-d}) from central differences at h and h/16 (default 2^-20).
// Throws std::runtime_error when the two differ by more than agree_tol.
DerivativeReport L_prime_one_chi(std::uint64_t d, std::optional<HReal> h = std::nullopt,
                                 HReal const& agree_tol = HReal(1e-8));

struct ChowlaSelbergReport {
  std::uint64_t d;
  std::uint64_t D;
  unsigned h;
  unsigned w;
  HReal L1;
  HReal L1_prime;
  HReal lhs;  // exp(L'/L - gamma)
  HReal rhs;  // 2 pi prod Gamma(a/D)^(-chi(a) w / 2h)
  HReal rel_error() const;  // |lhs/rhs - 1|
};

ChowlaSelbergReport chowla_selberg_check(std::uint64_t d);

struct ClassNumberCheck {
  std::uint64_t d;
  unsigned h_forms;
  unsigned h_analytic;  // round(w sqrt(D) L(1, chi) / 2 pi)
  HReal analytic;       // unrounded
  bool agree() const { return h_forms == h_analytic; }
};

ClassNumberCheck class_number_check(std::uint64_t d);

// Numerical record of the hypothesis behind the main theorem for one d:
// zeros of f on a window of (0, 1), mapped to x = y / (pi sqrt d), each with
// its best rational approximation of bounded denominator and |f| there.
struct RationalCandidate {
  HReal y;             // zero of f
  HReal x;             // y / (pi sqrt d)
  Rational nearest;    // best approximation of x, denominator <= max_denominator
  HReal f_at_nearest;  // |f(pi sqrt d * nearest)|
  bool vanishes;       // |f_at_nearest| below 2^(-bits/2)
};

struct TheoremReport {
  std::uint64_t d;
  Rational window_lo;  // in y = pi sqrt d x
  Rational window_hi;
  std::uint64_t max_denominator;
  std::vector<RationalCandidate> candidates;
  bool rational_zero_found;
  HReal L1_prime;
  int L1_prime_sign;
};

TheoremReport theorem_report(std::uint64_t d, Rational const& window_lo = Rational(1, 100),
                             Rational const& window_hi = Rational(99, 100),
                             std::uint64_t max_denominator = 10'000);

// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_rational(HReal const& x, std::uint64_t max_den);

}  // namespace zx::analysis
