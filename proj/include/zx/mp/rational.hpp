// rational.hpp
//
// Exact rationals for arguments whose prime-power status must be decidable.

#pragma once

#include "zx/mp/hreal.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace zx::mp {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p/q", "-p/q" or an integer literal. Throws std::invalid_argument.
Rational parse_rational(std::string const& text);
std::string to_string(Rational const& r);

HReal to_hreal(Rational const& r);
// Nearest rational with denominator 2^k, k chosen so the value is exact to
// the active precision; used to turn an HReal back into an exact argument.
Rational to_rational(HReal const& x);

bool is_integer(Rational const& r);
Integer floor(Rational const& r);
Integer ceil(Rational const& r);
// floor(r) as an unsigned machine integer; throws if it does not fit.
std::uint64_t floor_u64(Rational const& r);

}  // namespace zx::mp
