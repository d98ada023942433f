// liconst.hpp
//
// Stieltjes constants, the eta constants of -zeta'/zeta at s = 1, Li
// coefficients from those constants, and the Coffey split of lambda_n.
//
//   zeta(s)    = 1/(s-1) + sum_n (-1)^n gamma_n / n! (s-1)^n
//   -zeta'/zeta = 1/(s-1) + sum_n eta_n (s-1)^n

#pragma once

#include "zx/mp/hreal.hpp"
#include "zx/zeros/sums.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zx::liconst {

using mp::Approx;
using mp::HReal;

inline constexpr unsigned kMaxStieltjesOrder = 30;
inline constexpr std::uint64_t kBasePoints = 10'000;
inline constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 20;

// gamma_n by Euler-Maclaurin on sum log^n k / k with terms through B_10.
// The returned error covers the remainder and rounding. Starting from
// `base_points`, the cut-off doubles until the bound meets `target`
// (default 2^(-bits/2)); throws std::runtime_error past kMaxPoints.
Approx stieltjes(unsigned n, std::optional<HReal> target = std::nullopt, std::uint64_t base_points = kBasePoints);

// gamma_0 .. gamma_N, sharing the logarithm table.
std::vector<Approx> stieltjes_all(unsigned N, std::optional<HReal> target = std::nullopt,
                                  std::uint64_t base_points = kBasePoints);

// sum_{k <= m} log^n k / k - log^(n+1) m / (n+1): the unaccelerated limit.
HReal stieltjes_raw(unsigned n, std::uint64_t m);

// eta_0 .. eta_{N-1} by Laurent division of -zeta' by zeta, from gamma_0 .. gamma_N.
std::vector<HReal> eta_from_gamma(std::vector<HReal> const& gammas);

// lambda_n = -sum_{j=1}^n C(n,j) eta_{j-1} + 1 - n(gamma + log 4pi)/2
//            + sum_{j=2}^n (-1)^j C(n,j) (1 - 2^-j) zeta(j).
// Needs eta_0 .. eta_{n-1}.
HReal li_lambda_identity(unsigned n, std::vector<HReal> const& etas);

struct CoffeySplit {
  unsigned n;
  HReal S1;  // sum_{j=2}^n (-1)^j C(n,j) (1 - 2^-j) zeta(j)
  HReal S2;  // -sum_{j=1}^n C(n,j) eta_{j-1}
  HReal lower;  // (n(log n + gamma - 1) + 1)/2
  HReal upper;  // (n(log n + gamma + 1) - 1)/2
  bool bounds_ok;  // lower <= S1 <= upper with margin above rounding, n >= 2
  HReal lambda() const;  // 1 - n(gamma + log 4pi)/2 + S1 + S2
};

CoffeySplit coffey_decomposition(unsigned n, std::vector<HReal> const& etas);

struct StieltjesTable {
  unsigned order;
  std::vector<Approx> gammas;  // 0 .. order
  std::vector<HReal> etas;     // 0 .. order - 1
  std::vector<HReal> lambdas;  // lambda_1 .. lambda_order
  std::vector<CoffeySplit> coffey;  // n = 1 .. order
};

StieltjesTable build_table(unsigned order, std::optional<HReal> target = std::nullopt);

struct RhReport {
  HReal estimate;      // truncated sum_rho 1/|rho|^2 plus the density tail
  HReal target;        // 2 + gamma - log 4pi
  HReal discrepancy;   // estimate - target
  HReal tolerance;     // tail bound of the truncated sum
  bool within;         // |discrepancy| <= tolerance
  HReal excess;        // sum 1/|rho|^2 - 2 sum Re 1/rho over the table; 0 on the line
  std::size_t terms_used;
};

// Throws std::domain_error for an empty selection.
RhReport rh_statistic(zeros::ZeroTable const& table, zeros::SumSpec const& spec);

}  // namespace zx::liconst
