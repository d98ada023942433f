// series.hpp
//
// Truncated Laurent series in u = s - 1:
//
//   sum_{i=0}^{L-1} c_i u^(v + i) + O(u^(v + L))
//
// `valuation` v may be negative (a pole of order -v). The length is fixed at
// construction; arithmetic keeps only the terms known in both operands.

#pragma once

#include "zx/mp/hreal.hpp"

#include <vector>

namespace zx::mp {

class FormalSeries {
 public:
  FormalSeries(int valuation, std::vector<HReal> coefficients);

  // Power series c_0 + c_1 u + ... (valuation 0).
  static FormalSeries power(std::vector<HReal> coefficients);

  int valuation() const { return valuation_; }
  // Exponent of the first unknown term.
  int order() const { return valuation_ + static_cast<int>(coeffs_.size()); }
  std::size_t length() const { return coeffs_.size(); }

  // Coefficient of u^k; zero below the valuation. Throws past the order.
  HReal coefficient(int k) const;
  // Coefficient of u^(-1).
  HReal pole() const { return coefficient(-1); }

  FormalSeries derivative() const;
  FormalSeries operator-() const;

  friend FormalSeries operator+(FormalSeries const& a, FormalSeries const& b);
  friend FormalSeries operator-(FormalSeries const& a, FormalSeries const& b);
  friend FormalSeries operator*(FormalSeries const& a, FormalSeries const& b);
  // Throws std::domain_error when b is identically zero to its order.
  friend FormalSeries operator/(FormalSeries const& a, FormalSeries const& b);

 private:
  int valuation_;
  std::vector<HReal> coeffs_;
};

enum class SeriesOp { add, mul, div };

FormalSeries series_ops(FormalSeries const& a, FormalSeries const& b, SeriesOp kind);

}  // namespace zx::mp
