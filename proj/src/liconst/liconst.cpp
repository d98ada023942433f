#include "zx/liconst/liconst.hpp"

#include "zx/mp/rational.hpp"
#include "zx/mp/series.hpp"
#include "zx/mp/special.hpp"

#include <algorithm>
#include <stdexcept>

namespace zx::liconst {

namespace bmp = boost::multiprecision;

namespace {

constexpr unsigned kBernoulliPairs = 5;  // B_2 .. B_10
constexpr unsigned kRemainderOrder = 2 * kBernoulliPairs;

using Poly = std::vector<mp::Integer>;  // coefficients in log x, ascending

// f(x) = log^n x / x has f^(r)(x) = x^(-1-r) P_r(log x) with
// P_{r+1} = -(1 + r) P_r + P_r'.
std::vector<Poly> derivative_polys(unsigned n, unsigned r_max) {
  std::vector<Poly> out;
  Poly p(n + 1, 0);
  p[n] = 1;
  out.push_back(p);
  for (unsigned r = 0; r < r_max; ++r) {
    Poly next(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
      next[k] -= (1 + r) * p[k];
      if (k > 0) next[k - 1] += k * p[k];
    }
    p = next;
    out.push_back(p);
  }
  return out;
}

HReal eval_poly(Poly const& p, HReal const& L) {
  HReal acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * L + HReal(*it);
  return acc;
}

HReal factorial(unsigned k) {
  HReal f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// Upper bound for int_m^inf x^(-1-a) |P(log x)| dx.
HReal tail_integral(Poly const& p, HReal const& m, unsigned a) {
  HReal const L = bmp::log(m);
  HReal const ma = bmp::pow(m, -HReal(a));
  HReal total = 0;
  for (unsigned k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    // int_m^inf x^(-1-a) log^k x dx = m^-a sum_i k!/(k-i)! L^(k-i) / a^(i+1)
    HReal inner = 0;
    HReal falling = 1;
    for (unsigned i = 0; i <= k; ++i) {
      inner += falling * bmp::pow(L, HReal(k - i)) / bmp::pow(HReal(a), HReal(i + 1));
      falling *= k - i;
    }
    total += HReal(bmp::abs(p[k])) * inner;
  }
  return total * ma;
}

// gamma_0 .. gamma_N from one pass over k <= m.
std::vector<Approx> stieltjes_em(unsigned N, std::uint64_t m) {
  unsigned const bits = mp::current_bits();
  std::vector<HReal> sums(N + 1, HReal(0));
  for (std::uint64_t k = 1; k <= m; ++k) {
    HReal const L = k == 1 ? HReal(0) : bmp::log(HReal(k));
    HReal p = HReal(1) / k;
    for (unsigned n = 0; n <= N; ++n) {
      sums[n] += p;
      p *= L;
    }
  }
  HReal const mr(m);
  HReal const L = bmp::log(mr);
  std::vector<Approx> out;
  for (unsigned n = 0; n <= N; ++n) {
    auto const polys = derivative_polys(n, kRemainderOrder);
    HReal value = sums[n] - bmp::pow(L, HReal(n + 1)) / (n + 1) - eval_poly(polys[0], L) / mr / 2;
    for (unsigned j = 1; j <= kBernoulliPairs; ++j) {
      unsigned const r = 2 * j - 1;
      HReal const deriv = eval_poly(polys[r], L) * bmp::pow(mr, -HReal(1 + r));
      value -= mp::to_hreal(mp::bernoulli(2 * j)) / factorial(2 * j) * deriv;
    }
    HReal const remainder = 2 * bmp::abs(mp::to_hreal(mp::bernoulli(kRemainderOrder))) / factorial(kRemainderOrder) *
                            tail_integral(polys[kRemainderOrder], mr, kRemainderOrder);
    // Every term is positive, so the running sum bounds the accumulated rounding.
    HReal const rounding =
        (sums[n] + bmp::pow(L, HReal(n + 1))) * mp::ldexp(static_cast<long>(m) + 64, 2 - static_cast<long>(bits));
    out.push_back({value, remainder + rounding});
  }
  return out;
}

HReal rounding_floor(unsigned N, std::uint64_t m) {
  HReal const L = bmp::log(HReal(m));
  return bmp::pow(L, HReal(N + 1)) * mp::ldexp(static_cast<long>(m), 2 - static_cast<long>(mp::current_bits()));
}

HReal default_target() { return mp::ldexp(1, -static_cast<long>(mp::current_bits()) / 2); }

HReal binomial(unsigned n, unsigned k) {
  HReal c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

HReal s1_sum(unsigned n) {
  HReal acc = 0;
  for (unsigned j = 2; j <= n; ++j) {
    HReal const term = binomial(n, j) * (1 - mp::ldexp(1, -static_cast<long>(j))) * mp::zeta_int(static_cast<int>(j));
    acc += (j % 2 == 0) ? term : HReal(-term);
  }
  return acc;
}

HReal s2_sum(unsigned n, std::vector<HReal> const& etas) {
  if (etas.size() < n) {
    throw std::domain_error("li_lambda_identity: eta_0 .. eta_" + std::to_string(n - 1) + " required, have " +
                            std::to_string(etas.size()));
  }
  HReal acc = 0;
  for (unsigned j = 1; j <= n; ++j) acc -= binomial(n, j) * etas[j - 1];
  return acc;
}

HReal linear_part(unsigned n) { return 1 - HReal(n) * (mp::euler_gamma() + mp::log_four_pi()) / 2; }

}  // namespace

Approx stieltjes(unsigned n, std::optional<HReal> target, std::uint64_t base_points) {
  if (n > kMaxStieltjesOrder) throw std::domain_error("stieltjes: order above " + std::to_string(kMaxStieltjesOrder));
  return stieltjes_all(n, target, base_points).back();
}

std::vector<Approx> stieltjes_all(unsigned N, std::optional<HReal> target, std::uint64_t base_points) {
  if (N > kMaxStieltjesOrder) throw std::domain_error("stieltjes: order above " + std::to_string(kMaxStieltjesOrder));
  if (base_points < 2) throw std::domain_error("stieltjes: at least two base points required");
  HReal const want = target ? *target : default_target();
  for (std::uint64_t m = base_points; m <= kMaxPoints; m *= 2) {
    if (rounding_floor(N, m) > want) break;
    auto out = stieltjes_em(N, m);
    bool const ok = std::all_of(out.begin(), out.end(), [&](Approx const& a) { return a.error <= want; });
    if (ok) return out;
  }
  throw std::runtime_error("stieltjes: error target " + mp::to_string(want, 6) + " not reachable at " +
                           std::to_string(mp::current_bits()) + " bits");
}

HReal stieltjes_raw(unsigned n, std::uint64_t m) {
  if (m < 1) throw std::domain_error("stieltjes_raw: m >= 1 required");
  HReal sum = 0;
  for (std::uint64_t k = 1; k <= m; ++k) {
    sum += (n == 0 ? HReal(1) : bmp::pow(bmp::log(HReal(k)), HReal(n))) / k;
  }
  return sum - bmp::pow(bmp::log(HReal(m)), HReal(n + 1)) / (n + 1);
}

std::vector<HReal> eta_from_gamma(std::vector<HReal> const& gammas) {
  if (gammas.size() < 2) throw std::domain_error("eta_from_gamma: gamma_0 and gamma_1 at least");
  std::vector<HReal> coeffs{HReal(1)};
  HReal fact = 1;
  for (std::size_t n = 0; n < gammas.size(); ++n) {
    if (n > 0) fact *= n;
    coeffs.push_back((n % 2 == 0 ? gammas[n] : HReal(-gammas[n])) / fact);
  }
  mp::FormalSeries const zeta(-1, coeffs);
  auto const eta = mp::series_ops(-zeta.derivative(), zeta, mp::SeriesOp::div);
  std::vector<HReal> out;
  for (int k = 0; k < eta.order(); ++k) out.push_back(eta.coefficient(k));
  return out;
}

HReal li_lambda_identity(unsigned n, std::vector<HReal> const& etas) {
  if (n < 1) throw std::domain_error("li_lambda_identity: n >= 1 required");
  return linear_part(n) + s1_sum(n) + s2_sum(n, etas);
}

HReal CoffeySplit::lambda() const { return linear_part(n) + S1 + S2; }

CoffeySplit coffey_decomposition(unsigned n, std::vector<HReal> const& etas) {
  if (n < 1) throw std::domain_error("coffey_decomposition: n >= 1 required");
  CoffeySplit c{n, s1_sum(n), s2_sum(n, etas), 0, 0, false};
  HReal const base = n * (bmp::log(HReal(n)) + mp::euler_gamma());
  c.lower = (base - n + 1) / 2;
  c.upper = (base + n - 1) / 2;
  // S1 carries at most n zeta terms of size 2^n each.
  HReal const slack = bmp::pow(HReal(2), HReal(n)) * n * mp::ldexp(1, 8 - static_cast<long>(mp::current_bits()));
  c.bounds_ok = n >= 2 && c.S1 - c.lower > slack && c.upper - c.S1 > slack;
  return c;
}

StieltjesTable build_table(unsigned order, std::optional<HReal> target) {
  if (order < 1) throw std::domain_error("build_table: order >= 1 required");
  StieltjesTable t;
  t.order = order;
  t.gammas = stieltjes_all(order, target);
  std::vector<HReal> values;
  for (auto const& g : t.gammas) values.push_back(g.value);
  t.etas = eta_from_gamma(values);
  for (unsigned n = 1; n <= order; ++n) {
    t.lambdas.push_back(li_lambda_identity(n, t.etas));
    t.coffey.push_back(coffey_decomposition(n, t.etas));
  }
  return t;
}

RhReport rh_statistic(zeros::ZeroTable const& table, zeros::SumSpec const& spec) {
  auto const sq = zeros::sum_inv_rho_sq(table, spec);
  auto const inv = zeros::sum_inv_rho(table, spec);
  RhReport r;
  r.estimate = sq.estimate();
  r.target = 2 + mp::euler_gamma() - mp::log_four_pi();
  r.discrepancy = r.estimate - r.target;
  r.tolerance = sq.tail_bound ? *sq.tail_bound : sq.tail_mass;
  r.within = bmp::abs(r.discrepancy) <= r.tolerance;
  r.excess = sq.value - 2 * inv.value;
  r.terms_used = sq.terms_used;
  return r;
}

}  // namespace zx::liconst
