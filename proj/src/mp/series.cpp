#include "zx/mp/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace zx::mp {

FormalSeries::FormalSeries(int valuation, std::vector<HReal> coefficients)
    : valuation_(valuation), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("FormalSeries: at least one coefficient required");
}

FormalSeries FormalSeries::power(std::vector<HReal> coefficients) {
  return FormalSeries(0, std::move(coefficients));
}

HReal FormalSeries::coefficient(int k) const {
  if (k >= order()) throw std::out_of_range("FormalSeries: coefficient beyond truncation order");
  if (k < valuation_) return HReal(0);
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

FormalSeries FormalSeries::derivative() const {
  std::vector<HReal> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * (valuation_ + static_cast<int>(i)));
  }
  return FormalSeries(valuation_ - 1, std::move(out));
}

FormalSeries FormalSeries::operator-() const {
  std::vector<HReal> out;
  out.reserve(coeffs_.size());
  for (auto const& c : coeffs_) out.push_back(-c);
  return FormalSeries(valuation_, std::move(out));
}

FormalSeries operator+(FormalSeries const& a, FormalSeries const& b) {
  int const lo = std::min(a.valuation_, b.valuation_);
  int const hi = std::min(a.order(), b.order());
  if (hi <= lo) throw std::domain_error("FormalSeries: sum has no known terms");
  std::vector<HReal> out;
  for (int k = lo; k < hi; ++k) out.push_back(a.coefficient(k) + b.coefficient(k));
  return FormalSeries(lo, std::move(out));
}

FormalSeries operator-(FormalSeries const& a, FormalSeries const& b) { return a + (-b); }

FormalSeries operator*(FormalSeries const& a, FormalSeries const& b) {
  std::size_t const n = std::min(a.length(), b.length());
  std::vector<HReal> out(n, HReal(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return FormalSeries(a.valuation_ + b.valuation_, std::move(out));
}

FormalSeries operator/(FormalSeries const& a, FormalSeries const& b) {
  // Strip exact leading zeros of the divisor so its constant term is a unit.
  std::size_t lead = 0;
  while (lead < b.length() && b.coeffs_[lead] == 0) ++lead;
  if (lead == b.length()) throw std::domain_error("FormalSeries: division by an identically zero series");
  std::vector<HReal> const den(b.coeffs_.begin() + static_cast<long>(lead), b.coeffs_.end());

  std::size_t const n = std::min(a.length(), den.size());
  std::vector<HReal> q(n, HReal(0));
  for (std::size_t k = 0; k < n; ++k) {
    HReal acc = a.coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return FormalSeries(a.valuation_ - b.valuation_ - static_cast<int>(lead), std::move(q));
}

FormalSeries series_ops(FormalSeries const& a, FormalSeries const& b, SeriesOp kind) {
  switch (kind) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
  }
  throw std::invalid_argument("series_ops: unknown operation");
}

}  // namespace zx::mp
