#include "zx/explicit/zeta_rhs.hpp"

#include "zx/arith/mangoldt.hpp"
#include "zx/explicit/fu.hpp"

#include <stdexcept>

namespace zx::expl {

namespace bmp = boost::multiprecision;

namespace {

void require_gt1(Rational const& x, char const* who) {
  if (!(x > 1)) throw std::domain_error(std::string(who) + ": x > 1 required, got " + mp::to_string(x));
}

void require_unit(Rational const& x, char const* who) {
  if (!(x > 0 && x < 1)) throw std::domain_error(std::string(who) + ": 0 < x < 1 required, got " + mp::to_string(x));
}

bool is_odd_positive(Rational const& a) {
  if (!mp::is_integer(a) || a <= 0) return false;
  return mp::floor(a) % 2 == 1;
}

bool is_even_negative(Rational const& a) {
  if (!mp::is_integer(a) || a >= 0) return false;
  return mp::floor(a) % 2 == 0;
}

}  // namespace

HReal f_rhs_gt1(Rational const& x) {
  require_gt1(x, "f_rhs_gt1");
  HReal const xr = mp::to_hreal(x);
  return xr - arith::psi0(x).value - mp::log_two_pi() - bmp::log1p(-1 / (xr * xr)) / 2;
}

HReal f_rhs_lt1(Rational const& x) {
  require_unit(x, "f_rhs_lt1");
  HReal const xr = mp::to_hreal(x);
  return arith::t_sum(x, 0) + bmp::log(xr) + mp::euler_gamma() - bmp::atanh(xr) + xr;
}

HReal L_sum(Rational const& x) {
  require_gt1(x, "L_sum");
  return arith::t_sum(1 / x, 0);
}

HReal cosine_rhs(Rational const& x, CosineRoute route) {
  require_gt1(x, "cosine_rhs");
  HReal const xr = mp::to_hreal(x);
  HReal const root = bmp::sqrt(xr);
  if (route == CosineRoute::via_f) return (f_rhs_gt1(x) + xr * f_rhs_lt1(1 / x)) / root;
  HReal const lead = xr - arith::psi0(x).value - bmp::log1p(-1 / (xr * xr)) / 2;
  HReal const middle = xr * (L_sum(x) - bmp::log(xr)) - xr * bmp::log((xr + 1) / (xr - 1)) / 2;
  return (lead + middle + 1 - mp::log_two_pi() + mp::euler_gamma() * xr) / root;
}

HReal S_rhs_gt1(Rational const& x) {
  require_gt1(x, "S_rhs_gt1");
  HReal const xr = mp::to_hreal(x);
  return 1 + xr * (L_sum(x) - bmp::log(xr)) + xr - arith::psi0(x).value - xr * bmp::log((xr + 1) / (xr - 1)) / 2 -
         bmp::log1p(-1 / (xr * xr)) / 2;
}

HReal trivial_series_gt1(Rational const& x, Rational const& a) {
  require_gt1(x, "trivial_series_gt1");
  if (is_even_negative(a)) throw std::domain_error("trivial_series_gt1: 2n + a vanishes for a = " + mp::to_string(a));
  Rational const z = 1 / (x * x);
  return f_u_closed(a / 2, HComplex(mp::to_hreal(z))).re / 2;
}

HReal trivial_series_lt1(Rational const& x, Rational const& a) {
  if (!(x >= 0 && x < 1)) throw std::domain_error("trivial_series_lt1: 0 <= x < 1 required");
  if (is_odd_positive(a) && a > 1) {
    throw std::domain_error("trivial_series_lt1: 2n + 1 - a vanishes for a = " + mp::to_string(a));
  }
  if (x == 0) return HReal(0);
  HReal const xr = mp::to_hreal(x);
  return xr * f_u_closed((1 - a) / 2, HComplex(mp::to_hreal(x * x))).re / 2;
}

HReal general_rhs_gt1(Rational const& x, RationalFunctionPF const& pf) {
  require_gt1(x, "general_rhs_gt1");
  HReal const xr = mp::to_hreal(x);
  HReal acc = 0;
  for (auto const& [a, lambda] : pf.terms()) {
    if (a == 1 || is_even_negative(a)) {
      throw std::domain_error("general_rhs_gt1: root " + mp::to_string(a) + " is excluded (1, -2, -4, ...)");
    }
    HReal const term = xr / mp::to_hreal(1 - a) - arith::psi0_alpha(x, a) + trivial_series_gt1(x, a);
    acc += mp::to_hreal(lambda) * term;
  }
  return acc;
}

HReal general_rhs_lt1(Rational const& x, RationalFunctionPF const& pf) {
  require_unit(x, "general_rhs_lt1");
  HReal acc = 0;
  for (auto const& [a, lambda] : pf.terms()) {
    if (a == 0 || is_odd_positive(a)) {
      throw std::domain_error("general_rhs_lt1: root " + mp::to_string(a) + " is excluded (0, 1, 3, 5, ...)");
    }
    HReal const term = arith::t_sum(x, a) - 1 / mp::to_hreal(a) - trivial_series_lt1(x, a);
    acc += mp::to_hreal(lambda) * term;
  }
  return acc;
}

}  // namespace zx::expl
