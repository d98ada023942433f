#include "zx/mp/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace zx::mp {

namespace bmp = boost::multiprecision;

namespace {

constexpr unsigned kHurwitzMinTerms = 10;  // Bernoulli terms B_2 .. B_20 at least

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

HReal rising(HReal const& s, unsigned count) {
  HReal r = 1;
  for (unsigned i = 0; i < count; ++i) r *= s + i;
  return r;
}

HReal factorial(unsigned n) {
  HReal r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Rational const& bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    unsigned const m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[k];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

HReal log_gamma(HReal const& x) {
  if (x <= 0) throw std::domain_error("log_gamma: argument must be positive");
  unsigned const bits = current_bits();
  HReal const target = ldexp(1, -static_cast<long>(bits) - 8);
  double const y0 = 0.2 * bits + 8;

  // Raise the argument: Gamma(x) = Gamma(x + N) / (x (x+1) ... (x+N-1)).
  HReal y = x;
  HReal shift_product = 1;
  while (y < y0) {
    shift_product *= y;
    y += 1;
  }

  HReal acc = (y - HReal(0.5)) * bmp::log(y) - y + log_two_pi() / 2;
  HReal const y2 = y * y;
  HReal ypow = y;  // y^(2k-1)
  for (unsigned k = 1;; ++k) {
    HReal const term = to_hreal(bernoulli(2 * k)) / (HReal(2 * k) * (2 * k - 1) * ypow);
    if (bmp::abs(term) < target * bmp::abs(acc)) break;
    if (k > 200) throw std::runtime_error("log_gamma: Stirling series did not converge");
    acc += term;
    ypow *= y2;
  }
  return acc - bmp::log(shift_product);
}

Approx gamma_fn(HReal const& x, std::optional<HReal> rel_target) {
  if (x <= 0) throw std::domain_error("gamma_fn: argument must be positive");
  unsigned const bits = current_bits();
  HReal const rel = rel_target ? *rel_target : ldexp(1, 16 - static_cast<long>(bits));
  if (rel < ldexp(1, 4 - static_cast<long>(bits))) {
    throw std::domain_error("gamma_fn: requested error is below the precision floor");
  }
  HReal const value = bmp::exp(log_gamma(x));
  // Stirling truncation is below 2^(-bits-8) relative; rounding of the log
  // is a few ulps of |log Gamma(x + N)|, which is O(bits) in size.
  HReal const rel_err = ldexp(static_cast<long>(4 * bits), -static_cast<long>(bits));
  return {checked(value, "gamma_fn"), bmp::abs(value) * (rel < rel_err ? rel : rel_err)};
}

Approx hurwitz_zeta(HReal const& s, HReal const& a, std::optional<HReal> abs_target) {
  if (s == 1) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  if (s <= 0) throw std::domain_error("hurwitz_zeta: real s > 0 required");
  if (a <= 0 || a > 1) throw std::domain_error("hurwitz_zeta: a must lie in (0, 1]");
  unsigned const bits = current_bits();
  HReal const first = bmp::pow(a, -s);
  HReal const target = abs_target ? *abs_target : first * ldexp(1, -static_cast<long>(bits));
  if (target <= 0) throw std::domain_error("hurwitz_zeta: non-positive error target");

  // Remainder after the B_2K term:
  //   |R| <= 2 |B_m| / m! * (s)_m * (N + a)^(-s-m+1) / (s + m - 1), m = 2K + 2.
  unsigned const terms = std::max(kHurwitzMinTerms, bits / 8);
  unsigned const m = 2 * terms + 2;
  HReal const coeff = 2 * bmp::abs(to_hreal(bernoulli(m))) / factorial(m) * rising(s, m) / (s + m - 1);
  auto remainder = [&](HReal const& u) { return coeff * bmp::pow(u, -(s + m - 1)); };

  double const needed = std::exp((std::log(coeff.convert_to<double>()) - std::log(target.convert_to<double>())) /
                                 (s.convert_to<double>() + m - 1));
  long n_shift = std::max(1L, static_cast<long>(std::ceil(needed - a.convert_to<double>())));
  while (remainder(a + n_shift) > target) n_shift += 1 + n_shift / 16;

  HReal direct = 0;
  for (long n = n_shift - 1; n >= 0; --n) direct += bmp::exp(-s * bmp::log(a + n));

  HReal const u = a + n_shift;
  HReal const log_u = bmp::log(u);
  HReal const u_pow = bmp::exp(-s * log_u);  // u^(-s)
  HReal tail = u * u_pow / (s - 1) + u_pow / 2;
  HReal const inv_u2 = 1 / (u * u);
  HReal upow = u_pow / u;  // u^(-s-2k+1)
  HReal poch = s;          // (s)_(2k-1)
  HReal fact = 2;          // (2k)!
  for (unsigned k = 1; k <= terms; ++k) {
    tail += to_hreal(bernoulli(2 * k)) / fact * poch * upow;
    poch *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= HReal(2 * k + 1) * (2 * k + 2);
    upow *= inv_u2;
  }
  HReal const value = direct + tail;
  HReal const rounding = (bmp::abs(direct) + bmp::abs(tail)) * ldexp(n_shift + 40, -static_cast<long>(bits));
  return {checked(value, "hurwitz_zeta"), remainder(u) + rounding};
}

HReal zeta_int(int j) {
  if (j < 2) throw std::domain_error("zeta_int: j >= 2 required");
  return hurwitz_zeta(HReal(j), HReal(1)).value;
}

HReal zeta_real(HReal const& s) { return hurwitz_zeta(s, HReal(1)).value; }

DerivativeEstimate central_derivative(std::function<HReal(HReal const&)> const& f, HReal const& s,
                                      HReal const& h1, HReal const& agree_tol) {
  HReal const h2 = h1 / 16;
  HReal const d1 = (f(s + h1) - f(s - h1)) / (2 * h1);
  HReal const d2 = (f(s + h2) - f(s - h2)) / (2 * h2);
  if (bmp::abs(d1 - d2) > agree_tol) {
    throw std::runtime_error("central_derivative: step sizes disagree (|D(h1) - D(h2)| = " +
                             to_string(bmp::abs(d1 - d2), 6) + ")");
  }
  return {(256 * d2 - d1) / 255, d1, d2};
}

HReal digamma(HReal const& x) {
  if (x <= 0 && x == bmp::floor(x)) throw std::domain_error("digamma: pole at a non-positive integer");
  if (x < HReal(0.5)) {
    HReal const pi_x = pi() * x;
    return digamma(1 - x) - pi() * bmp::cos(pi_x) / bmp::sin(pi_x);
  }
  unsigned const bits = current_bits();
  HReal const target = ldexp(1, -static_cast<long>(bits) - 8);
  double const y0 = 0.2 * bits + 8;
  HReal y = x;
  HReal shift = 0;
  while (y < y0) {
    shift += 1 / y;
    y += 1;
  }
  HReal acc = bmp::log(y) - 1 / (2 * y);
  HReal const inv_y2 = 1 / (y * y);
  HReal ypow = inv_y2;
  for (unsigned k = 1;; ++k) {
    HReal const term = to_hreal(bernoulli(2 * k)) / (2 * k) * ypow;
    if (bmp::abs(term) < target * bmp::abs(acc)) break;
    if (k > 200) throw std::runtime_error("digamma: asymptotic series did not converge");
    acc -= term;
    ypow *= inv_y2;
  }
  return acc - shift;
}

HReal zeta_log_derivative(HReal const& s) {
  if (s == 0) return log_two_pi();
  if (s == 1) throw std::domain_error("zeta_log_derivative: pole at s = 1");
  if (s < HReal(0.5)) {
    if (s < 0 && bmp::floor(s / 2) == s / 2) throw std::domain_error("zeta_log_derivative: trivial zero");
    // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    HReal const half_pi_s = pi() * s / 2;
    return log_two_pi() + pi() / 2 * bmp::cos(half_pi_s) / bmp::sin(half_pi_s) - digamma(1 - s) -
           zeta_log_derivative(1 - s);
  }
  // g(s) = (s - 1) zeta(s) is smooth through the pole.
  auto const g = [](HReal const& t) { return (t - 1) * zeta_real(t); };
  HReal const h = ldexp(1, -20);
  if (bmp::abs(s - 1) <= 2 * h) {
    throw std::domain_error("zeta_log_derivative: too close to the pole for the difference step");
  }
  auto const d = central_derivative(g, s, h, HReal(1e-6));
  return d.value / g(s) - 1 / (s - 1);
}

}  // namespace zx::mp
