#include "zx/analysis/chowla.hpp"

#include "zx/analysis/roots.hpp"
#include "zx/mp/special.hpp"

#include <cmath>
#include <stdexcept>

namespace zx::analysis {

namespace bmp = boost::multiprecision;

namespace {

arith::DirichletCharacter character(std::uint64_t d) {
  return arith::DirichletCharacter::from_kronecker(arith::kronecker_chi(d));
}

}  // namespace

HReal L_one_chi(std::uint64_t d) { return arith::dirichlet_l(HReal(1), character(d)).re; }

DerivativeReport L_prime_one_chi(std::uint64_t d, std::optional<HReal> h, HReal const& agree_tol) {
  auto const chi = character(d);
  HReal const step = h ? *h : mp::ldexp(1, -20);
  if (!(step > 0 && step < HReal(0.5))) throw std::domain_error("L_prime_one_chi: step must lie in (0, 1/2)");
  auto const est = mp::central_derivative([&](HReal const& s) { return arith::dirichlet_l(s, chi).re; }, HReal(1), step,
                                          agree_tol);
  return {est.value, est.raw_coarse, est.raw_fine};
}

HReal ChowlaSelbergReport::rel_error() const { return bmp::abs(lhs / rhs - 1); }

ChowlaSelbergReport chowla_selberg_check(std::uint64_t d) {
  auto const data = arith::class_data(d);
  ChowlaSelbergReport r;
  r.d = d;
  r.D = data.D;
  r.h = data.h;
  r.w = data.w;
  r.L1 = L_one_chi(d);
  r.L1_prime = L_prime_one_chi(d).value;
  r.lhs = bmp::exp(r.L1_prime / r.L1 - mp::euler_gamma());

  HReal log_prod = 0;
  HReal const weight = HReal(data.w) / (2 * HReal(data.h));
  for (std::uint64_t a = 1; a <= data.D; ++a) {
    int const c = data.chi(static_cast<std::int64_t>(a));
    if (c == 0) continue;
    log_prod -= c * weight * mp::log_gamma(HReal(a) / HReal(data.D));
  }
  r.rhs = 2 * mp::pi() * bmp::exp(log_prod);
  return r;
}

ClassNumberCheck class_number_check(std::uint64_t d) {
  auto const data = arith::class_data(d);
  ClassNumberCheck c;
  c.d = d;
  c.h_forms = static_cast<unsigned>(data.forms.size());
  c.analytic = HReal(data.w) * bmp::sqrt(HReal(data.D)) * L_one_chi(d) / (2 * mp::pi());
  c.h_analytic = static_cast<unsigned>(bmp::round(c.analytic).convert_to<double>());
  return c;
}

Rational best_rational(HReal const& x, std::uint64_t max_den) {
  if (max_den == 0) throw std::domain_error("best_rational: max_den >= 1 required");
  using mp::Integer;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  HReal rest = x;
  for (int iter = 0; iter < 200; ++iter) {
    HReal const a_r = bmp::floor(rest);
    Integer const a = mp::floor(mp::to_rational(a_r));
    Integer const q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Largest admissible semiconvergent against the last convergent.
      Integer const k = (Integer(max_den) - q0) / q1;
      Rational const semi(Integer(k * p1 + p0), Integer(k * q1 + q0));
      Rational const conv(p1, q1);
      HReal const ds = bmp::abs(mp::to_hreal(semi) - x);
      HReal const dc = bmp::abs(mp::to_hreal(conv) - x);
      return ds < dc ? semi : conv;
    }
    Integer const p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    HReal const frac = rest - a_r;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return Rational(p1, q1);
}

TheoremReport theorem_report(std::uint64_t d, Rational const& window_lo, Rational const& window_hi,
                             std::uint64_t max_denominator) {
  if (!arith::is_squarefree(d)) throw std::domain_error("theorem_report: d must be squarefree");
  TheoremReport t;
  t.d = d;
  t.window_lo = window_lo;
  t.window_hi = window_hi;
  t.max_denominator = max_denominator;
  HReal const scale = mp::pi() * bmp::sqrt(HReal(d));
  HReal const vanish = mp::ldexp(1, -static_cast<long>(mp::current_bits()) / 2);
  for (auto const& rec : find_zeros_lt1(window_lo, window_hi)) {
    if (rec.kind != RootKind::genuine_zero) continue;
    RationalCandidate c;
    c.y = rec.root;
    c.x = rec.root / scale;
    c.nearest = best_rational(c.x, max_denominator);
    HReal const y_near = scale * mp::to_hreal(c.nearest);
    c.f_at_nearest = (y_near > 0 && y_near < 1) ? bmp::abs(f_lt1_real(y_near)) : HReal(-1);
    c.vanishes = c.f_at_nearest >= 0 && c.f_at_nearest < vanish;
    t.candidates.push_back(c);
  }
  t.rational_zero_found = false;
  for (auto const& c : t.candidates) t.rational_zero_found = t.rational_zero_found || c.vanishes;
  t.L1_prime = L_prime_one_chi(d).value;
  t.L1_prime_sign = t.L1_prime > 0 ? 1 : (t.L1_prime < 0 ? -1 : 0);
  return t;
}

}  // namespace zx::analysis
