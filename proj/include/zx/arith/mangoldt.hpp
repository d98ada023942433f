// mangoldt.hpp
//
// von Mangoldt table and the weighted prime-power sums built on it.
//
// Arguments x are exact rationals so that "x is a prime power" is decidable.
// Every sum applies the half-weight at the jump exactly as in the classical
// normalisation: psi_0 sits halfway across each discontinuity.

#pragma once

#include "zx/mp/hreal.hpp"
#include "zx/mp/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace zx::arith {

using mp::HReal;
using mp::Rational;

// Largest table the sieve will build (entries).
inline constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{1} << 28;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

class MangoldtTable {
 public:
  std::uint64_t limit() const { return limit_; }
  // 0 when n is not a prime power (including n = 1); otherwise the prime.
  std::uint64_t prime_of(std::uint64_t n) const;
  bool is_prime_power(std::uint64_t n) const { return prime_of(n) != 0; }
  // Lambda(n) = log p at the working precision, 0 otherwise.
  HReal lambda(std::uint64_t n) const;
  // Primes p <= limit in ascending order.
  std::vector<std::uint32_t> const& primes() const { return primes_; }

 private:
  friend MangoldtTable mangoldt_sieve(std::uint64_t n, std::uint64_t budget);
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> base_;  // base_[n] = p for n = p^k, else 0
  std::vector<std::uint32_t> primes_;
};

// Throws std::length_error when n exceeds the memory budget.
MangoldtTable mangoldt_sieve(std::uint64_t n, std::uint64_t budget = kDefaultSieveBudget);

// Process-wide table covering at least n (grown on demand, never shrunk).
std::shared_ptr<MangoldtTable const> shared_table(std::uint64_t n);

// Trial-division prime-power test usable past the table.
std::optional<PrimePower> prime_power(std::uint64_t n);
// Same test for an exact rational (integers >= 2 only).
std::optional<PrimePower> prime_power(Rational const& x);

struct Psi0Value {
  HReal value;
  bool at_prime_power;
};

// psi_0(x) = sum_{n <= x} Lambda(n), with Lambda(x)/2 in place of Lambda(x)
// when x is a prime power. Requires x > 1.
Psi0Value psi0(Rational const& x);

// Floating-point argument for plotting: always the plain sum, so the value at
// an exact prime power is the right limit rather than the midpoint.
HReal psi0_real(HReal const& x);

// x^alpha sum_{n <= x} Lambda(n) / n^alpha; at a prime power x the last term
// is replaced by Lambda(x)/2 (not weighted). Requires x > 1.
HReal psi0_alpha(Rational const& x, Rational const& alpha);

// x^alpha sum_{n <= 1/x} Lambda(n) / n^(1 - alpha); when 1/x is a prime power
// the last term is replaced by (x/2) Lambda(1/x). Requires 0 < x < 1.
HReal t_sum(Rational const& x, Rational const& alpha);

// sum_{n <= y} c(n) weight(n) over prime powers n = p^k <= y, visiting primes
// in ascending order. `visit(p, k, n, log_p)` is called once per prime power.
void for_each_prime_power(std::uint64_t y,
                          std::function<void(std::uint64_t p, unsigned k, std::uint64_t n, HReal const& log_p)> const& visit);

}  // namespace zx::arith
