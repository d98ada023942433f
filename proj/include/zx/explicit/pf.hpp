// pf.hpp
//
// A(t) / B(t) with B = prod (t - alpha_i), alpha_i distinct rationals, held as
// sum_i lambda_i / (t - alpha_i) with exact residues lambda_i = A(alpha_i) / B'(alpha_i).

#pragma once

#include "zx/mp/hreal.hpp"
#include "zx/mp/rational.hpp"

#include <vector>

namespace zx::expl {

using mp::HComplex;
using mp::HReal;
using mp::Rational;

struct PartialFraction {
  Rational root;
  Rational residue;
};

class RationalFunctionPF {
 public:
  std::vector<Rational> const& numerator() const { return a_; }  // ascending powers
  std::vector<PartialFraction> const& terms() const { return terms_; }
  std::size_t degree() const { return terms_.size(); }

  // sum_i lambda_i / (t - alpha_i)
  HComplex evaluate(HComplex const& t) const;
  // A(t) / prod (t - alpha_i), computed directly.
  HComplex evaluate_quotient(HComplex const& t) const;
  // Human-readable form, e.g. "1/(t - 1/2)".
  std::string describe() const;

 private:
  friend RationalFunctionPF partial_fractions(std::vector<Rational> numerator, std::vector<Rational> const& roots);
  std::vector<Rational> a_;
  std::vector<PartialFraction> terms_;
};

// Throws std::domain_error on repeated roots or deg A >= number of roots.
RationalFunctionPF partial_fractions(std::vector<Rational> numerator, std::vector<Rational> const& roots);

// Parses "A-coefficients|roots", e.g. "1|1/2" for 1/(t - 1/2) or "1|0,1/2".
RationalFunctionPF parse_pf(std::string const& text);

}  // namespace zx::expl
