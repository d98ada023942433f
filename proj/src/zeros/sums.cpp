#include "zx/zeros/sums.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace zx::zeros {

namespace bmp = boost::multiprecision;

SumSpec SumSpec::up_to(HReal T) {
  SumSpec s;
  s.height = std::move(T);
  return s;
}

SumSpec SumSpec::first(std::size_t K) {
  SumSpec s;
  s.count = K;
  return s;
}

void SumSpec::validate() const {
  if (height.has_value() == count.has_value()) throw std::invalid_argument("SumSpec: set exactly one of T and K");
  if (block_size == 0) throw std::invalid_argument("SumSpec: block size must be positive");
}

void CompensatedSum::add(HReal const& x) {
  HReal const t = sum_ + x;
  if (bmp::abs(sum_) >= bmp::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

std::size_t selection_size(ZeroTable const& table, SumSpec const& spec) {
  spec.validate();
  auto const& e = table.entries();
  std::size_t n = 0;
  if (spec.count) {
    n = std::min(*spec.count, e.size());
  } else {
    n = static_cast<std::size_t>(
        std::upper_bound(e.begin(), e.end(), *spec.height, [](HReal const& t, ZeroEntry const& z) { return t < z.gamma; }) -
        e.begin());
  }
  if (n == 0) {
    throw std::domain_error(spec.height ? "zero sum: no zeros with gamma <= " + mp::to_string(*spec.height, 12)
                                        : std::string("zero sum: empty selection"));
  }
  return n;
}

SumResult zero_sum(ZeroTable const& table, SumSpec const& spec, TermFn const& term) {
  std::size_t const n = selection_size(table, spec);
  auto const& e = table.entries();
  HReal const half(0.5);

  auto pair_value = [&](std::size_t i) {
    auto const& z = e[i];
    HReal v = 2 * term(z.rho()).re;
    if (spec.pair_with_reflection && z.beta != half) v += 2 * term(HComplex(1 - z.beta, z.gamma)).re;
    return v;
  };
  auto index_at = [&](std::size_t k) { return spec.ordering == Ordering::ascending ? k : n - 1 - k; };

  std::size_t const bs = spec.block_size;
  std::size_t const blocks = (n + bs - 1) / bs;
  unsigned const bits = mp::current_bits();
  auto block_sum = [&](std::size_t b) {
    mp::PrecisionScope scope(bits);
    CompensatedSum acc;
    for (std::size_t k = b * bs; k < std::min(n, (b + 1) * bs); ++k) acc.add(pair_value(index_at(k)));
    return acc.value();
  };

  std::vector<HReal> partial(blocks);
  if (spec.deterministic || blocks == 1 || std::thread::hardware_concurrency() < 2) {
    for (std::size_t b = 0; b < blocks; ++b) partial[b] = block_sum(b);
  } else {
    std::vector<std::future<HReal>> futures;
    for (std::size_t b = 0; b < blocks; ++b) futures.push_back(std::async(std::launch::async, block_sum, b));
    for (std::size_t b = 0; b < blocks; ++b) partial[b] = futures[b].get();
  }
  CompensatedSum total;
  for (auto const& p : partial) total.add(p);
  return {total.value(), n, e[n - 1].gamma};
}

std::optional<HReal> tail_estimate(HReal const& T, HReal const& p, HReal const& x) {
  if (p < 2) return std::nullopt;
  if (!(T > 0)) throw std::domain_error("tail_estimate: T must be positive");
  HReal const two_pi = 2 * mp::pi();
  HReal const pm1 = p - 1;
  HReal const integral = bmp::pow(T, -pm1) * (bmp::log(T / two_pi) / pm1 + 1 / (pm1 * pm1)) / two_pi;
  return 4 * bmp::sqrt(x) * integral;
}

HReal density_tail(HReal const& T, HReal const& c) {
  if (!(T > 0)) throw std::domain_error("density_tail: T must be positive");
  HReal const two_pi = 2 * mp::pi();
  return c * (bmp::log(T / two_pi) + 1) / (two_pi * T);
}

TailedSum li_lambda_direct(int n, ZeroTable const& table, SumSpec const& spec) {
  if (n < 1) throw std::domain_error("li_lambda_direct: n >= 1 required");
  HComplex const one(HReal(1));
  auto const r = zero_sum(table, spec, [&](HComplex const& rho) {
    HComplex const inv = one / rho;
    if (n == 1) return inv;
    HComplex const w = one - inv;
    HComplex wn = w;
    for (int k = 1; k < n; ++k) wn *= w;
    return one - wn;
  });
  HReal const n2(static_cast<long>(n) * n);
  return {r.value, density_tail(r.height, n2), n2 * *tail_estimate(r.height, HReal(2), HReal(1)), r.terms_used, r.height};
}

TailedSum sum_inv_rho(ZeroTable const& table, SumSpec const& spec) { return li_lambda_direct(1, table, spec); }

TailedSum sum_inv_rho_sq(ZeroTable const& table, SumSpec const& spec) {
  auto const r = zero_sum(table, spec, [](HComplex const& rho) { return HComplex(1 / rho.norm()); });
  return {r.value, density_tail(r.height, HReal(2)), tail_estimate(r.height, HReal(2), HReal(1)), r.terms_used, r.height};
}

HReal cosine_sum(HReal const& x, ZeroTable const& table, SumSpec const& spec) {
  if (x < 1) throw std::domain_error("cosine_sum: x >= 1 required");
  std::size_t const n = selection_size(table, spec);
  HReal const half(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].beta != half) {
      throw std::domain_error("cosine_sum: zero " + std::to_string(i + 1) + " is off the critical line");
    }
  }
  HReal const log_x = bmp::log(x);
  return zero_sum(table, spec, [&](HComplex const& rho) {
           return mp::polar(1 / (half * half + rho.im * rho.im), rho.im * log_x);
         }).value;
}

TailedSum S_sum(HReal const& x, ZeroTable const& table, SumSpec const& spec) {
  if (x < 1) throw std::domain_error("S_sum: x >= 1 required");
  HComplex const one(HReal(1));
  auto const r = zero_sum(table, spec, [&](HComplex const& rho) { return mp::pow(x, rho) / (rho * (one - rho)); });
  return {r.value, HReal(0), tail_estimate(r.height, HReal(2), x), r.terms_used, r.height};
}

}  // namespace zx::zeros
