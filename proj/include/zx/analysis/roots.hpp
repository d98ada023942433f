// roots.hpp
//
// Sign changes of the explicit-formula function f on either side of 1.
// f is smooth between prime powers (or their reciprocals below 1) and jumps
// by Lambda(n) (or Lambda(n)/n) there, sitting halfway across each jump.

#pragma once

#include "zx/mp/hreal.hpp"
#include "zx/mp/rational.hpp"

#include <string>
#include <vector>

namespace zx::analysis {

using mp::HReal;
using mp::Rational;

enum class RootKind { genuine_zero, jump_crossing };

std::string to_string(RootKind kind);

struct RootRecord {
  Rational lo;
  Rational hi;
  HReal root;
  HReal residual;  // |f(root)| on the branch of the bracket
  RootKind kind;
  // Jump records only: one-sided limits at the discontinuity.
  HReal left_limit;
  HReal right_limit;
};

struct ScanOptions {
  Rational tol = Rational(1, 1) / Rational(mp::Integer(1) << 100);
  Rational step = Rational(1, 256);  // grid spacing inside each continuity interval
  unsigned min_points = 4;           // grid points per interval, at least
};

// Zeros of f_rhs_gt1 on [lo, hi], 1 < lo < hi, in ascending order. A jump
// at lo itself is not reported. Throws std::domain_error for a bad range or
// a tolerance below the working precision.
std::vector<RootRecord> find_zeros_gt1(Rational const& lo, Rational const& hi, ScanOptions const& opts = {});

// Zeros of f_rhs_lt1 on [lo, hi], 0 < lo < hi < 1, with jumps at 1/p^k.
std::vector<RootRecord> find_zeros_lt1(Rational const& lo, Rational const& hi, ScanOptions const& opts = {});

// f below 1 at an arbitrary real point with the plain sum over n <= 1/y, so
// an exact reciprocal prime power gets the left limit.
HReal f_lt1_real(HReal const& y);

// Left and right limits of f at a jump point (a prime power above 1, or the
// reciprocal of one below 1). Throws std::domain_error at any other point.
std::pair<HReal, HReal> one_sided_limits(Rational const& x);

}  // namespace zx::analysis
