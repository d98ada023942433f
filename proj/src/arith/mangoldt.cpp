#include "zx/arith/mangoldt.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace zx::arith {

namespace bmp = boost::multiprecision;

std::uint64_t MangoldtTable::prime_of(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("MangoldtTable: n = " + std::to_string(n) + " beyond table limit");
  return base_[n];
}

HReal MangoldtTable::lambda(std::uint64_t n) const {
  auto const p = prime_of(n);
  return p == 0 ? HReal(0) : HReal(bmp::log(HReal(p)));
}

MangoldtTable mangoldt_sieve(std::uint64_t n, std::uint64_t budget) {
  if (n < 1) throw std::domain_error("mangoldt_sieve: N >= 1 required");
  if (n > budget || n >= std::uint64_t{1} << 32) {
    throw std::length_error("mangoldt_sieve: N = " + std::to_string(n) + " exceeds the memory budget of " +
                            std::to_string(budget) + " entries");
  }
  MangoldtTable t;
  t.limit_ = n;
  t.base_.assign(n + 1, 0);
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    t.primes_.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
    for (std::uint64_t q = p; q <= n; q *= p) {
      t.base_[q] = static_cast<std::uint32_t>(p);
      if (q > n / p) break;
    }
  }
  return t;
}

std::shared_ptr<MangoldtTable const> shared_table(std::uint64_t n) {
  static std::mutex mutex;
  static std::shared_ptr<MangoldtTable const> table;
  std::lock_guard<std::mutex> lock(mutex);
  if (!table || table->limit() < n) {
    std::uint64_t grown = std::max<std::uint64_t>(n, 1 << 12);
    if (table) grown = std::max(grown, std::min(2 * table->limit(), kDefaultSieveBudget));
    table = std::make_shared<MangoldtTable const>(mangoldt_sieve(grown));
  }
  return table;
}

std::optional<PrimePower> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::optional<PrimePower> prime_power(Rational const& x) {
  if (!mp::is_integer(x) || x < 2) return std::nullopt;
  return prime_power(mp::floor_u64(x));
}

void for_each_prime_power(std::uint64_t y,
                          std::function<void(std::uint64_t, unsigned, std::uint64_t, HReal const&)> const& visit) {
  if (y < 2) return;
  auto const table = shared_table(y);
  for (std::uint64_t const p : table->primes()) {
    if (p > y) break;
    HReal const log_p = bmp::log(HReal(p));
    unsigned k = 1;
    for (std::uint64_t q = p;; q *= p, ++k) {
      visit(p, k, q, log_p);
      if (q > y / p) break;
    }
  }
}

Psi0Value psi0(Rational const& x) {
  if (x <= 1) throw std::domain_error("psi0: x > 1 required, got " + mp::to_string(x));
  std::uint64_t const y = mp::floor_u64(x);
  HReal sum = 0;
  for_each_prime_power(y, [&](std::uint64_t, unsigned, std::uint64_t, HReal const& log_p) { sum += log_p; });
  auto const pp = prime_power(x);
  if (pp) sum -= bmp::log(HReal(pp->prime)) / 2;
  return {sum, pp.has_value()};
}

HReal psi0_alpha(Rational const& x, Rational const& alpha) {
  if (x <= 1) throw std::domain_error("psi0_alpha: x > 1 required, got " + mp::to_string(x));
  std::uint64_t const y = mp::floor_u64(x);
  auto const pp = prime_power(x);
  HReal const a = mp::to_hreal(alpha);
  HReal sum = 0;
  std::uint64_t last_p = 0;
  HReal step;  // p^(-alpha)
  HReal weight;
  for_each_prime_power(y, [&](std::uint64_t p, unsigned, std::uint64_t n, HReal const& log_p) {
    if (p != last_p) {
      last_p = p;
      step = bmp::exp(-a * log_p);
      weight = 1;
    }
    weight *= step;
    if (pp && n == y) return;  // replaced by the unweighted half term
    sum += log_p * weight;
  });
  HReal value = bmp::pow(mp::to_hreal(x), a) * sum;
  if (pp) value += bmp::log(HReal(pp->prime)) / 2;
  return value;
}

HReal t_sum(Rational const& x, Rational const& alpha) {
  if (x <= 0 || x >= 1) throw std::domain_error("T_sum: x in (0, 1) required, got " + mp::to_string(x));
  Rational const inv = 1 / x;
  std::uint64_t const y = mp::floor_u64(inv);
  auto const pp = prime_power(inv);
  HReal const b = mp::to_hreal(alpha) - 1;
  HReal sum = 0;
  std::uint64_t last_p = 0;
  HReal step;  // p^(alpha - 1)
  HReal weight;
  for_each_prime_power(y, [&](std::uint64_t p, unsigned, std::uint64_t n, HReal const& log_p) {
    if (p != last_p) {
      last_p = p;
      step = bmp::exp(b * log_p);
      weight = 1;
    }
    weight *= step;
    if (pp && n == y) return;
    sum += log_p * weight;
  });
  HReal const xr = mp::to_hreal(x);
  HReal value = bmp::pow(xr, mp::to_hreal(alpha)) * sum;
  if (pp) value += xr / 2 * bmp::log(HReal(pp->prime));
  return value;
}

HReal psi0_real(HReal const& x) {
  if (x <= 1) throw std::domain_error("psi0_real: x > 1 required");
  std::uint64_t const y = bmp::floor(x).convert_to<std::uint64_t>();
  HReal sum = 0;
  for_each_prime_power(y, [&](std::uint64_t, unsigned, std::uint64_t, HReal const& log_p) { sum += log_p; });
  return sum;
}

}  // namespace zx::arith
