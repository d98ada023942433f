#include "zx/explicit/verify.hpp"

#include "zx/explicit/zeta_rhs.hpp"
#include "zx/mp/special.hpp"

#include <array>
#include <stdexcept>

namespace zx::expl {

namespace bmp = boost::multiprecision;

namespace {

constexpr std::array<std::pair<Identity, char const*>, 6> kNames{{
    {Identity::von_mangoldt, "von-mangoldt"},
    {Identity::ingham, "ingham"},
    {Identity::cosine, "cosine"},
    {Identity::S, "S"},
    {Identity::general, "general"},
    {Identity::selberg, "selberg"},
}};

struct Side {
  HComplex value;
  std::size_t terms = 0;
  HReal height;
};

RationalFunctionPF const& require_pf(VerifyRequest const& r) {
  if (!r.pf) throw std::invalid_argument("identity general needs a partial-fraction description");
  return *r.pf;
}

SelbergDescriptor const& require_descriptor(VerifyRequest const& r) {
  if (!r.F) throw std::invalid_argument("identity selberg needs a descriptor");
  if (!r.F->real_coefficients) {
    throw std::domain_error("selberg: only real-coefficient descriptors can be summed from upper half-plane tables");
  }
  return *r.F;
}

HComplex log_derivative(SelbergDescriptor const& F, Rational const& s) {
  if (!F.log_derivative) throw std::domain_error("descriptor " + F.label + " has no log-derivative provider");
  return F.log_derivative(mp::to_hreal(s));
}

std::string const& expected_label(VerifyRequest const& r) {
  static std::string const zeta = "zeta";
  if (r.id != Identity::selberg) return zeta;
  auto const& F = require_descriptor(r);
  return r.x > 1 ? F.label : F.dual_label;
}

Side zero_side(VerifyRequest const& r, zeros::ZeroTable const& table, zeros::SumSpec const& spec) {
  HReal const xr = mp::to_hreal(r.x);
  auto from = [](zeros::SumResult const& s, HComplex extra = {}) {
    return Side{HComplex(s.value) + extra, s.terms_used, s.height};
  };
  switch (r.id) {
    case Identity::von_mangoldt:
    case Identity::ingham:
      return from(zeros::zero_sum(table, spec, [&](HComplex const& rho) { return mp::pow(xr, rho) / rho; }));
    case Identity::cosine: {
      HReal const value = zeros::cosine_sum(xr, table, spec);
      auto const n = zeros::selection_size(table, spec);
      return {HComplex(value), n, table[n - 1].gamma};
    }
    case Identity::S: {
      auto const s = zeros::S_sum(xr, table, spec);
      return {HComplex(s.value), s.terms_used, s.height};
    }
    case Identity::general: {
      auto const& pf = require_pf(r);
      HComplex extra;
      for (auto const& [a, lambda] : pf.terms()) {
        HReal const weight = mp::to_hreal(lambda) * bmp::exp(mp::to_hreal(a) * bmp::log(xr));
        HReal const ld = mp::zeta_log_derivative(mp::to_hreal(r.x > 1 ? a : Rational(1 - a)));
        extra += HComplex(r.x > 1 ? weight * ld : -weight * ld);
      }
      return from(zeros::zero_sum(table, spec, [&](HComplex const& rho) { return pf.evaluate(rho) * mp::pow(xr, rho); }),
                  extra);
    }
    case Identity::selberg: {
      auto const& F = require_descriptor(r);
      HComplex const alpha(mp::to_hreal(r.alpha));
      HComplex extra;
      if (r.x > 1) {
        extra = HComplex(bmp::exp(mp::to_hreal(r.alpha) * bmp::log(xr))) * log_derivative(F, r.alpha);
      } else if (r.alpha != 0) {
        extra = -(HComplex(bmp::exp(mp::to_hreal(r.alpha) * bmp::log(xr))) * log_derivative(F, 1 - r.alpha));
      }
      return from(zeros::zero_sum(table, spec, [&](HComplex const& rho) { return mp::pow(xr, rho) / (rho - alpha); }),
                  extra);
    }
  }
  throw std::logic_error("unhandled identity");
}

}  // namespace

std::string to_string(Identity id) {
  for (auto const& [key, name] : kNames) {
    if (key == id) return name;
  }
  throw std::logic_error("unnamed identity");
}

Identity parse_identity(std::string const& name) {
  for (auto const& [key, label] : kNames) {
    if (name == label) return key;
  }
  throw std::invalid_argument("unknown identity '" + name +
                              "' (expected von-mangoldt, ingham, cosine, S, general or selberg)");
}

HComplex closed_form(VerifyRequest const& r) {
  switch (r.id) {
    case Identity::von_mangoldt:
      return f_rhs_gt1(r.x);
    case Identity::ingham:
      return f_rhs_lt1(r.x);
    case Identity::cosine:
      return cosine_rhs(r.x);
    case Identity::S:
      return S_rhs_gt1(r.x) + mp::euler_gamma() * mp::to_hreal(r.x) - mp::log_two_pi();
    case Identity::general:
      return r.x > 1 ? general_rhs_gt1(r.x, require_pf(r)) : general_rhs_lt1(r.x, require_pf(r));
    case Identity::selberg:
      return r.x > 1 ? selberg_rhs_gt1(r.x, r.alpha, require_descriptor(r))
                     : selberg_rhs_lt1(r.x, r.alpha, require_descriptor(r));
  }
  throw std::logic_error("unhandled identity");
}

EvalReport verify_identity(VerifyRequest const& r, zeros::ZeroTable const& table, zeros::SumSpec const& spec) {
  if (r.x <= 0 || r.x == 1) throw std::domain_error("verify_identity: x must be positive and different from 1");
  std::string const& want = expected_label(r);
  if (table.label() != want) {
    throw std::invalid_argument("zero table '" + table.label() + "' does not match '" + want + "'");
  }

  EvalReport report;
  report.id = r.id;
  report.x = r.x;
  report.table_label = table.label();
  report.bits = mp::current_bits();
  report.rhs = closed_form(r);
  auto const side = zero_side(r, table, spec);
  report.lhs = side.value;
  report.terms_used = side.terms;
  report.height = side.height;
  report.residual = report.lhs - report.rhs;

  if (r.id == Identity::S) report.tail_bound = zeros::tail_estimate(report.height, HReal(2), mp::to_hreal(r.x));

  if (r.trend_divisor > 0 && side.terms / r.trend_divisor >= 1) {
    auto coarse_spec = spec;
    coarse_spec.height.reset();
    coarse_spec.count = side.terms / r.trend_divisor;
    auto const coarse = zero_side(r, table, coarse_spec);
    HReal const coarse_abs = (coarse.value - report.rhs).abs();
    report.trend = Trend{coarse.terms, coarse_abs, report.abs_residual() < coarse_abs};
  }
  return report;
}

}  // namespace zx::expl
