// verify.hpp
//
// Residuals between truncated zero sums and the closed-form sides.

#pragma once

#include "zx/explicit/pf.hpp"
#include "zx/explicit/selberg.hpp"
#include "zx/zeros/sums.hpp"

#include <optional>
#include <string>

namespace zx::expl {

enum class Identity {
  von_mangoldt,  // sum x^rho/rho, x > 1
  ingham,        // sum x^rho/rho, 0 < x < 1
  cosine,        // paired cosine sum, x > 1, zeros on the line
  S,             // sum x^rho/(rho(1 - rho)), x > 1
  general,       // sum (A/B)(rho) x^rho, either side of 1
  selberg,       // sum x^rho/(rho - alpha) for a descriptor, either side of 1
};

std::string to_string(Identity id);
// Accepts the names printed by to_string. Throws std::invalid_argument.
Identity parse_identity(std::string const& name);

struct VerifyRequest {
  Identity id = Identity::von_mangoldt;
  Rational x = 2;
  std::optional<RationalFunctionPF> pf;    // general
  Rational alpha = 0;                      // selberg
  std::optional<SelbergDescriptor> F;      // selberg
  std::size_t trend_divisor = 10;          // 0 disables the coarse run
};

// Residual of the same identity with terms_used / divisor pairs.
struct Trend {
  std::size_t coarse_terms;
  HReal coarse_abs_residual;
  bool decreasing;  // |residual| < coarse |residual|
};

struct EvalReport {
  Identity id;
  Rational x;
  std::string table_label;
  std::size_t terms_used = 0;
  HReal height;
  HComplex lhs;
  HComplex rhs;
  HComplex residual;  // lhs - rhs
  std::optional<HReal> tail_bound;
  std::optional<Trend> trend;
  unsigned bits = 0;

  HReal abs_residual() const { return residual.abs(); }
};

// Closed-form side alone.
HComplex closed_form(VerifyRequest const& request);

// Throws std::invalid_argument when the table label does not match the
// identity (zeta for the first five; F, or its dual below 1, for selberg),
// and propagates domain errors.
EvalReport verify_identity(VerifyRequest const& request, zeros::ZeroTable const& table, zeros::SumSpec const& spec);

}  // namespace zx::expl
