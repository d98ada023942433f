#include "zx/analysis/roots.hpp"

#include "zx/arith/mangoldt.hpp"
#include "zx/explicit/zeta_rhs.hpp"
#include "zx/mp/special.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zx::analysis {

namespace bmp = boost::multiprecision;

namespace {

enum class Side { above, below };

HReal smooth_part(Side side, HReal const& x) {
  if (side == Side::above) return x - mp::log_two_pi() - bmp::log1p(-1 / (x * x)) / 2;
  return bmp::log(x) + mp::euler_gamma() - bmp::atanh(x) + x;
}

HReal f_exact(Side side, Rational const& x) { return side == Side::above ? expl::f_rhs_gt1(x) : expl::f_rhs_lt1(x); }

struct Jump {
  Rational at;
  HReal half;  // half the jump height
};

// Jump points of f in [lo, hi], ascending.
std::vector<Jump> jumps_in(Side side, Rational const& lo, Rational const& hi) {
  std::vector<Jump> out;
  if (side == Side::above) {
    for (auto n = mp::ceil(lo); n <= mp::floor(hi); ++n) {
      auto const pp = arith::prime_power(n.convert_to<std::uint64_t>());
      if (pp) out.push_back({Rational(n), bmp::log(HReal(pp->prime)) / 2});
    }
    return out;
  }
  auto const n_lo = mp::ceil(1 / hi);
  for (auto n = mp::floor(1 / lo); n >= n_lo; --n) {
    auto const pp = arith::prime_power(n.convert_to<std::uint64_t>());
    if (pp) out.push_back({Rational(1) / Rational(n), bmp::log(HReal(pp->prime)) / (2 * HReal(n))});
  }
  return out;
}

int sign_of(HReal const& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

void check_tolerance(ScanOptions const& opts, Rational const& hi) {
  if (opts.tol <= 0) throw std::domain_error("root scan: tolerance must be positive");
  if (opts.step <= 0) throw std::domain_error("root scan: grid step must be positive");
  HReal const floor = mp::ldexp(1, 16 - static_cast<long>(mp::current_bits())) * (hi > 1 ? mp::to_hreal(hi) : HReal(1));
  if (mp::to_hreal(opts.tol) < floor) {
    throw std::domain_error("root scan: tolerance " + mp::to_string(mp::to_hreal(opts.tol), 4) +
                            " below the precision floor " + mp::to_string(floor, 4));
  }
}

std::vector<RootRecord> scan(Side side, Rational const& lo, Rational const& hi, ScanOptions const& opts) {
  auto const jumps = jumps_in(side, lo, hi);
  std::vector<Rational> cuts{lo};
  for (auto const& j : jumps) {
    if (j.at != cuts.back()) cuts.push_back(j.at);
  }
  if (cuts.back() != hi) cuts.push_back(hi);

  std::vector<RootRecord> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational const a = cuts[i];
    Rational const b = cuts[i + 1];
    Rational const mid = (a + b) / 2;
    HReal const offset = f_exact(side, mid) - smooth_part(side, mp::to_hreal(mid));
    auto const branch = [&](Rational const& x) { return smooth_part(side, mp::to_hreal(x)) + offset; };

    auto const steps = std::max<std::uint64_t>(opts.min_points, mp::floor_u64(mp::ceil((b - a) / opts.step)));
    Rational left = a;
    HReal f_left = branch(left);
    for (std::uint64_t k = 1; k <= steps; ++k) {
      Rational const right = a + (b - a) * Rational(k) / Rational(steps);
      HReal const f_right = branch(right);
      if (sign_of(f_left) * sign_of(f_right) < 0) {
        Rational l = left, r = right;
        int const s_l = sign_of(f_left);
        while (r - l >= opts.tol) {
          Rational const m = (l + r) / 2;
          HReal const fm = branch(m);
          if (fm == 0) {
            l = r = m;
            break;
          }
          (sign_of(fm) == s_l ? l : r) = m;
        }
        HReal const root = mp::to_hreal((l + r) / 2);
        HReal const residual = bmp::abs(smooth_part(side, root) + offset);
        out.push_back({l, r, root, residual, RootKind::genuine_zero, HReal(0), HReal(0)});
      }
      left = right;
      f_left = f_right;
    }
  }

  for (auto const& j : jumps) {
    if (j.at == lo) continue;  // its left side lies outside the range
    HReal const mid_value = f_exact(side, j.at);
    HReal const left_limit = mid_value + j.half;
    HReal const right_limit = mid_value - j.half;
    if (sign_of(left_limit) * sign_of(right_limit) < 0) {
      out.push_back({j.at, j.at, mp::to_hreal(j.at), bmp::abs(mid_value), RootKind::jump_crossing, left_limit,
                     right_limit});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](RootRecord const& x, RootRecord const& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace

std::string to_string(RootKind kind) { return kind == RootKind::genuine_zero ? "genuine-zero" : "jump-crossing"; }

std::vector<RootRecord> find_zeros_gt1(Rational const& lo, Rational const& hi, ScanOptions const& opts) {
  if (!(lo > 1 && lo < hi)) throw std::domain_error("find_zeros_gt1: 1 < lo < hi required");
  check_tolerance(opts, hi);
  return scan(Side::above, lo, hi, opts);
}

std::vector<RootRecord> find_zeros_lt1(Rational const& lo, Rational const& hi, ScanOptions const& opts) {
  if (!(lo > 0 && lo < hi && hi < 1)) throw std::domain_error("find_zeros_lt1: 0 < lo < hi < 1 required");
  check_tolerance(opts, hi);
  return scan(Side::below, lo, hi, opts);
}

HReal f_lt1_real(HReal const& y) {
  if (!(y > 0 && y < 1)) throw std::domain_error("f_lt1_real: 0 < y < 1 required");
  auto const top = static_cast<std::uint64_t>(bmp::floor(1 / y).convert_to<double>());
  HReal t = 0;
  arith::for_each_prime_power(top, [&](std::uint64_t, unsigned, std::uint64_t n, HReal const& log_p) { t += log_p / n; });
  return t + smooth_part(Side::below, y);
}

std::pair<HReal, HReal> one_sided_limits(Rational const& x) {
  if (x > 1) {
    auto const pp = arith::prime_power(x);
    if (!pp) throw std::domain_error("one_sided_limits: " + mp::to_string(x) + " is not a prime power");
    HReal const mid = expl::f_rhs_gt1(x);
    HReal const half = bmp::log(HReal(pp->prime)) / 2;
    return {mid + half, mid - half};
  }
  if (x > 0 && x < 1) {
    auto const pp = arith::prime_power(1 / x);
    if (!pp) throw std::domain_error("one_sided_limits: " + mp::to_string(x) + " is not a reciprocal prime power");
    HReal const mid = expl::f_rhs_lt1(x);
    HReal const half = bmp::log(HReal(pp->prime)) * mp::to_hreal(x) / 2;
    return {mid + half, mid - half};
  }
  throw std::domain_error("one_sided_limits: x must be positive and different from 1");
}

}  // namespace zx::analysis
