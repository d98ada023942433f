// sums.hpp
//
// Truncated sums over zeros in the symmetric order: each conjugate pair is
// folded into 2 Re term(rho) before it is accumulated.

#pragma once

#include "zx/zeros/table.hpp"

#include <functional>
#include <optional>

namespace zx::zeros {

enum class Ordering { ascending, descending };

struct SumSpec {
  std::optional<HReal> height;       // include pairs with gamma <= T
  std::optional<std::size_t> count;  // or the first K pairs
  Ordering ordering = Ordering::ascending;
  bool deterministic = true;          // serial block evaluation
  bool pair_with_reflection = false;  // also add 1 - conj(rho) for off-line entries
  std::size_t block_size = 2048;

  static SumSpec up_to(HReal T);
  static SumSpec first(std::size_t K);
  // Throws std::invalid_argument unless exactly one of T, K is set.
  void validate() const;
};

using TermFn = std::function<HComplex(HComplex const& rho)>;

struct SumResult {
  HReal value;
  std::size_t terms_used;  // pairs
  HReal height;            // ordinate of the last pair used
};

// Neumaier-compensated accumulation.
class CompensatedSum {
 public:
  void add(HReal const& x);
  HReal value() const { return sum_ + carry_; }

 private:
  HReal sum_ = 0;
  HReal carry_ = 0;
};

// Number of table entries the spec selects. Throws std::domain_error if none.
std::size_t selection_size(ZeroTable const& table, SumSpec const& spec);

SumResult zero_sum(ZeroTable const& table, SumSpec const& spec, TermFn const& term);

// Truncated value with two tail figures: `tail_mass` is the expected missing
// contribution under the zero-density law (added to give the estimate), and
// `tail_bound` a safety-factored bound when the series converges absolutely.
struct TailedSum {
  HReal value;
  HReal tail_mass;
  std::optional<HReal> tail_bound;
  std::size_t terms_used;
  HReal height;
  HReal estimate() const { return value + tail_mass; }
};

// 4 sqrt(x) / (2 pi) * int_T^inf t^(-p) log(t / 2 pi) dt, i.e. twice the
// density heuristic for pairs. Empty for p < 2.
std::optional<HReal> tail_estimate(HReal const& T, HReal const& p, HReal const& x);

// c * (log(T / 2 pi) + 1) / (2 pi T): the density prediction for
// sum_{gamma > T} c / gamma^2.
HReal density_tail(HReal const& T, HReal const& c);

TailedSum sum_inv_rho(ZeroTable const& table, SumSpec const& spec);
TailedSum sum_inv_rho_sq(ZeroTable const& table, SumSpec const& spec);
// sum 2 cos(gamma log x) / (1/4 + gamma^2); requires every beta = 1/2.
HReal cosine_sum(HReal const& x, ZeroTable const& table, SumSpec const& spec);
// sum_rho (1 - (1 - 1/rho)^n); n = 1 shares the code path of sum_inv_rho.
TailedSum li_lambda_direct(int n, ZeroTable const& table, SumSpec const& spec);
// sum x^rho / (rho (1 - rho)), x >= 1.
TailedSum S_sum(HReal const& x, ZeroTable const& table, SumSpec const& spec);

}  // namespace zx::zeros
