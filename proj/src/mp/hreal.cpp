#include "zx/mp/hreal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zx::mp {

namespace {

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

struct DefaultPrecisionInit {
  DefaultPrecisionInit() { HReal::default_precision(digits10_for_bits(kDefaultBits)); }
};
DefaultPrecisionInit const default_precision_init;

}  // namespace

HReal PrecisionContext::epsilon() const { return ldexp(1, -static_cast<long>(bits)); }

unsigned current_bits() {
  HReal probe;
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

PrecisionScope::PrecisionScope(unsigned bits)
    : bits_(bits), saved_digits10_(HReal::default_precision()) {
  if (bits < kMinBits) {
    throw std::invalid_argument("working precision must be at least 64 bits");
  }
  HReal::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { HReal::default_precision(saved_digits10_); }

HReal pi() {
  HReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

HReal euler_gamma() {
  HReal r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

HReal log_two_pi() { return boost::multiprecision::log(2 * pi()); }

HReal log_four_pi() { return boost::multiprecision::log(4 * pi()); }

HReal ldexp(long value, long exponent) {
  HReal r;
  mpfr_set_si_2exp(r.backend().data(), value, exponent, MPFR_RNDN);
  return r;
}

HReal from_string(std::string const& decimal) {
  HReal r;
  if (mpfr_set_str(r.backend().data(), decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + decimal + "'");
  }
  return r;
}

std::string to_string(HReal const& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_fixed(HReal const& x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << x;
  return os.str();
}

HReal const& checked(HReal const& x, char const* what) {
  if (!boost::multiprecision::isfinite(x)) {
    throw std::overflow_error(std::string(what) + ": non-finite result");
  }
  return x;
}

HReal HComplex::abs() const { return boost::multiprecision::hypot(re, im); }

HComplex& HComplex::operator+=(HComplex const& o) {
  re += o.re;
  im += o.im;
  return *this;
}

HComplex& HComplex::operator-=(HComplex const& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

HComplex& HComplex::operator*=(HComplex const& o) {
  HReal r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

HComplex& HComplex::operator/=(HComplex const& o) {
  HReal const den = o.norm();
  if (den == 0) throw std::domain_error("complex division by zero");
  HReal r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

HComplex operator+(HComplex a, HComplex const& b) { return a += b; }
HComplex operator-(HComplex a, HComplex const& b) { return a -= b; }
HComplex operator*(HComplex a, HComplex const& b) { return a *= b; }
HComplex operator/(HComplex a, HComplex const& b) { return a /= b; }
HComplex operator-(HComplex const& a) { return {-a.re, -a.im}; }

HComplex exp(HComplex const& z) { return polar(boost::multiprecision::exp(z.re), z.im); }

HComplex log(HComplex const& z) {
  if (z.re == 0 && z.im == 0) throw std::domain_error("log of zero");
  return {boost::multiprecision::log(z.abs()), boost::multiprecision::atan2(z.im, z.re)};
}

HComplex pow(HComplex const& z, HComplex const& w) {
  if (z.re == 0 && z.im == 0) return HComplex{};
  return exp(w * log(z));
}

HComplex pow(HReal const& x, HComplex const& s) {
  if (x <= 0) throw std::domain_error("real base of complex power must be positive");
  HReal const lx = boost::multiprecision::log(x);
  return polar(boost::multiprecision::exp(s.re * lx), s.im * lx);
}

HComplex polar(HReal const& modulus, HReal const& theta) {
  return {modulus * boost::multiprecision::cos(theta), modulus * boost::multiprecision::sin(theta)};
}

HComplex root_of_unity(long k, long n) {
  long r = k % n;
  if (r < 0) r += n;
  if (r == 0) return HComplex{HReal(1)};
  if (2 * r == n) return HComplex{HReal(-1)};
  if (4 * r == n) return HComplex{HReal(0), HReal(1)};
  if (4 * r == 3 * n) return HComplex{HReal(0), HReal(-1)};
  return polar(HReal(1), 2 * pi() * r / n);
}

}  // namespace zx::mp
