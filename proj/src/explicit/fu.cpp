#include "zx/explicit/fu.hpp"

#include <stdexcept>

namespace zx::expl {

namespace bmp = boost::multiprecision;

namespace {

void require_disc(HComplex const& z, char const* who) {
  if (!(z.abs() < 1)) throw std::domain_error(std::string(who) + ": |z| < 1 required");
}

long to_long(mp::Integer const& v) {
  if (v > 1'000'000 || v < -1'000'000) throw std::domain_error("f_u: rational parameter out of range");
  return v.convert_to<long>();
}

bool is_zero(HComplex const& z) { return z.re == 0 && z.im == 0; }

// u = p/q with 0 <= p < q.
HComplex f_fractional(long p, long q, HComplex const& z) {
  if (p == 0) return -mp::log(HComplex(HReal(1)) - z);
  HComplex const w = mp::pow(z, HComplex(HReal(1) / q));
  HComplex acc;
  for (long m = 0; m < q; ++m) {
    HComplex const root = mp::root_of_unity(m, q);
    acc += mp::root_of_unity(-p * m % q, q) * mp::log(HComplex(HReal(1)) - root * w);
  }
  HComplex w_p(HReal(1));
  for (long k = 0; k < p; ++k) w_p *= w;
  return -(acc / w_p) - HComplex(HReal(q) / p);
}

}  // namespace

HComplex f_u_closed(Rational const& u, HComplex const& z) {
  require_disc(z, "f_u_closed");
  mp::Integer const k_big = mp::floor(u);
  long const k = to_long(k_big);
  Rational const r = u - Rational(k_big);
  if (k < 0 && r == 0) {
    throw std::domain_error("f_u_closed: u = " + mp::to_string(u) + " makes a denominator n + u vanish");
  }
  if (is_zero(z)) return {};
  long const p = to_long(boost::multiprecision::numerator(r));
  long const q = to_long(boost::multiprecision::denominator(r));
  HComplex const base = f_fractional(p, q, z);
  HReal const rr = mp::to_hreal(r);

  // f_{k+r}(z) = z^(-k) [f_r(z) - sum_{m=1}^{k} z^m/(m+r)]          (k >= 0)
  //            = z^(-k) [f_r(z) + sum_{m=k+1}^{0} z^m/(m+r)]        (k < 0)
  HComplex correction;
  HComplex zm(HReal(1));
  if (k >= 0) {
    for (long m = 1; m <= k; ++m) {
      zm *= z;
      correction -= zm / HComplex(HReal(m) + rr);
    }
  } else {
    HComplex inv = HComplex(HReal(1)) / z;
    for (long m = 0; m >= k + 1; --m) {
      correction += zm / HComplex(HReal(m) + rr);
      zm *= inv;
    }
  }
  HComplex scale(HReal(1));
  if (k > 0) {
    HComplex const inv = HComplex(HReal(1)) / z;
    for (long m = 0; m < k; ++m) scale *= inv;
  } else {
    for (long m = 0; m < -k; ++m) scale *= z;
  }
  return scale * (base + correction);
}

HComplex f_u_series(HReal const& u, HComplex const& z) {
  require_disc(z, "f_u_series");
  if (!(u > -1)) throw std::domain_error("f_u_series: u > -1 required");
  HReal const r = z.abs();
  unsigned const bits = mp::current_bits();
  HReal const eps = mp::ldexp(1, -static_cast<long>(bits) - 4);
  HComplex acc;
  HComplex zn = z;
  for (long n = 1;; ++n) {
    acc += zn / HComplex(n + u);
    // Remainder <= r^(n+1) / ((n + 1 + u)(1 - r)).
    HReal const rest = bmp::pow(r, n + 1) / ((n + 1 + u) * (1 - r));
    if (rest < eps * (1 + acc.abs())) break;
    if (n > 50'000'000) throw std::runtime_error("f_u_series: too many terms");
    zn *= z;
  }
  return acc;
}

HComplex f_u_uncorrected(Rational const& u, HComplex const& z) {
  require_disc(z, "f_u_uncorrected");
  if (u < 0 || u >= 1) throw std::domain_error("f_u_uncorrected: u in [0, 1) required");
  long const p = to_long(boost::multiprecision::numerator(u));
  long const q = to_long(boost::multiprecision::denominator(u));
  HComplex const w = mp::pow(z, HComplex(HReal(1) / q));
  HComplex acc;
  for (long m = 0; m < q; ++m) {
    acc += mp::root_of_unity(-p * m % q, q) * mp::log(HComplex(HReal(1)) - mp::root_of_unity(m, q) * w);
  }
  return -(mp::pow(z, HComplex(mp::to_hreal(u))) * acc);
}

}  // namespace zx::expl
