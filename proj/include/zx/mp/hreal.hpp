// hreal.hpp
//
// Working-precision real and complex numbers.
//
// HReal is a variable-precision MPFR float. Every HReal created while a
// given precision is active carries that many bits; the active precision is
// process-wide and is changed only through PrecisionScope (tests, CLI
// start-up). Concurrent evaluation is safe as long as nobody changes the
// precision while work is in flight.

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace zx::mp {

using HReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultBits = 192;
inline constexpr unsigned kMinBits = 64;

// Immutable description of a working precision.
struct PrecisionContext {
  unsigned bits = kDefaultBits;

  // 2^(-bits): the unit roundoff scale used by error contracts.
  HReal epsilon() const;
};

// Bits carried by numbers created right now.
unsigned current_bits();

// Sets the active precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(PrecisionScope const&) = delete;
  PrecisionScope& operator=(PrecisionScope const&) = delete;

  PrecisionContext context() const { return {bits_}; }

 private:
  unsigned bits_;
  unsigned saved_digits10_;
};

// A value together with an absolute error bound.
struct Approx {
  HReal value;
  HReal error;
};

HReal pi();
HReal euler_gamma();
HReal log_two_pi();
HReal log_four_pi();
HReal ldexp(long value, long exponent);  // value * 2^exponent
HReal from_string(std::string const& decimal);
std::string to_string(HReal const& x, int digits = 30);
// Fixed-point rendering with `decimals` digits after the point.
std::string to_fixed(HReal const& x, int decimals);

// Checks the finiteness invariant; throws std::overflow_error otherwise.
HReal const& checked(HReal const& x, char const* what);

struct HComplex {
  HReal re;
  HReal im;

  HComplex() : re(0), im(0) {}
  HComplex(HReal r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real lift
  HComplex(HReal r, HReal i) : re(std::move(r)), im(std::move(i)) {}

  HComplex conj() const { return {re, -im}; }
  HReal norm() const { return re * re + im * im; }
  HReal abs() const;

  HComplex& operator+=(HComplex const& o);
  HComplex& operator-=(HComplex const& o);
  HComplex& operator*=(HComplex const& o);
  HComplex& operator/=(HComplex const& o);
};

HComplex operator+(HComplex a, HComplex const& b);
HComplex operator-(HComplex a, HComplex const& b);
HComplex operator*(HComplex a, HComplex const& b);
HComplex operator/(HComplex a, HComplex const& b);
HComplex operator-(HComplex const& a);

HComplex exp(HComplex const& z);
// Principal branch, arg in (-pi, pi].
HComplex log(HComplex const& z);
// Principal power z^w = exp(w log z).
HComplex pow(HComplex const& z, HComplex const& w);
// x^s for real x > 0.
HComplex pow(HReal const& x, HComplex const& s);
// e^{i theta}
HComplex polar(HReal const& modulus, HReal const& theta);
// e^{2 pi i k / n}
HComplex root_of_unity(long k, long n);

}  // namespace zx::mp
