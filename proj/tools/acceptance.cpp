// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: zeta-acceptance [zero-file]
// The zero file defaults to $ZETA_EXPLICIT_ZEROS, then the bundled
// 10^4-pair table. Exit status counts failures outside kKnownRed.

#include "zx/analysis/chowla.hpp"
#include "zx/analysis/roots.hpp"
#include "zx/cli/app.hpp"
#include "zx/explicit/fu.hpp"
#include "zx/explicit/selberg.hpp"
#include "zx/explicit/verify.hpp"
#include "zx/explicit/zeta_rhs.hpp"
#include "zx/liconst/liconst.hpp"
#include "zx/mp/special.hpp"
#include "zx/zeros/sums.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace {

using namespace zx;
namespace bmp = boost::multiprecision;
using mp::HComplex;
using mp::HReal;
using mp::Rational;

constexpr unsigned kBits = 192;
constexpr std::size_t kPairs = 10'000;
constexpr std::size_t kCoarsePairs = 1'000;

// Pinned tolerances.
HReal const kInvRhoTol("5e-4");
HReal const kInvRhoFixtureTol("5e-3");
HReal const kRhTol("1e-3");
HReal const kFuTol("1e-12");
HReal const kSpecialisationRel("1e-20");
HReal const kDirichletTol("1e-15");
HReal const kLiGap("5e-3");
HReal const kLambda1Tol("5e-4");
HReal const kGamma0Tol("1e-9");
HReal const kGamma1Tol("1e-8");
HReal const kRootResidual("1e-10");
HReal const kChowlaRel("1e-6");
HReal const kGammaProductTol("1e-20");
// Residual ceilings at 10^4 pairs, frozen from the calibration run
// (see README); each sits above the observed value with headroom.
HReal const kVonMangoldtCeiling("5e-3");
HReal const kInghamCeiling("1e-3");
HReal const kCosineCeiling("1e-4");
HReal const kGeneralCeiling("1e-3");

// Criteria that cannot pass: the claimed closed form for eta_1 disagrees
// with the Laurent division.
std::set<int> const kKnownRed{12};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, std::string const& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

HReal hmax(HReal const& a, HReal const& b) { return a < b ? b : a; }

std::string sci(HReal const& x) { return mp::to_string(x, 4); }

Rational q(std::string const& s) { return mp::parse_rational(s); }

struct Context {
  zeros::ZeroTable table;
  bool full;  // at least kPairs entries
};

zeros::SumSpec first(std::size_t k) { return zeros::SumSpec::first(k); }

// |residual| at kPairs and kCoarsePairs for one identity request.
struct TrendResult {
  HReal fine;
  HReal coarse;
};

TrendResult trend(expl::VerifyRequest req, Context const& ctx) {
  req.trend_divisor = 0;
  auto const fine = expl::verify_identity(req, ctx.table, first(kPairs));
  auto const coarse = expl::verify_identity(req, ctx.table, first(kCoarsePairs));
  return {fine.abs_residual(), coarse.abs_residual()};
}

void check_trend(Outcome& o, std::string const& name, TrendResult const& t, HReal const& ceiling) {
  o.detail << " " << name << ": |r|(1e4)=" << sci(t.fine) << " |r|(1e3)=" << sci(t.coarse);
  o.require(t.fine <= ceiling, name + " above " + sci(ceiling));
  o.require(t.fine < t.coarse, name + " not decreasing");
}

bool need_full(Outcome& o, Context const& ctx) {
  if (ctx.full) return true;
  o.require(false, "zero table has " + std::to_string(ctx.table.size()) + " pairs, 10^4 required");
  return false;
}

Outcome c1(Context const& ctx) {
  Outcome o;
  HReal const target("0.0230957");
  auto const fixture = zeros::sum_inv_rho(zeros::embedded_zeta_zeros(), first(100));
  o.detail << " fixture(100)=" << mp::to_string(fixture.estimate(), 8);
  o.require(bmp::abs(fixture.estimate() - target) <= kInvRhoFixtureTol, "100-zero fixture");
  if (need_full(o, ctx)) {
    auto const s = zeros::sum_inv_rho(ctx.table, first(kPairs));
    o.detail << " 1e4=" << mp::to_string(s.estimate(), 8) << " gap=" << sci(bmp::abs(s.estimate() - target));
    o.require(bmp::abs(s.estimate() - target) <= kInvRhoTol, "10^4 pairs");
  }
  return o;
}

Outcome c2(Context const& ctx) {
  Outcome o;
  if (!need_full(o, ctx)) return o;
  auto const r = liconst::rh_statistic(ctx.table, first(kPairs));
  o.detail << " estimate=" << mp::to_string(r.estimate, 8) << " target=" << mp::to_string(r.target, 8)
           << " gap=" << sci(bmp::abs(r.discrepancy));
  o.require(bmp::abs(r.discrepancy) <= kRhTol, "discrepancy");
  return o;
}

Outcome c3(Context const& ctx) {
  Outcome o;
  if (!need_full(o, ctx)) return o;
  expl::VerifyRequest req;
  req.id = expl::Identity::von_mangoldt;
  req.x = q("21/2");
  check_trend(o, "x=21/2", trend(req, ctx), kVonMangoldtCeiling);
  return o;
}

Outcome c4(Context const& ctx) {
  Outcome o;
  if (!need_full(o, ctx)) return o;
  for (auto const* xs : {"1/10", "2/5"}) {
    expl::VerifyRequest req;
    req.id = expl::Identity::ingham;
    req.x = q(xs);
    check_trend(o, std::string("x=") + xs, trend(req, ctx), kInghamCeiling);
  }
  return o;
}

Outcome c5(Context const& ctx) {
  Outcome o;
  if (!need_full(o, ctx)) return o;
  for (auto const* xs : {"5/2", "4"}) {
    for (std::size_t k : {kCoarsePairs, kPairs}) {
      expl::VerifyRequest req;
      req.id = expl::Identity::S;
      req.x = q(xs);
      req.trend_divisor = 0;
      auto const rep = expl::verify_identity(req, ctx.table, first(k));
      o.detail << " x=" << xs << ",K=" << k << ": " << sci(rep.abs_residual()) << "<=" << sci(*rep.tail_bound);
      o.require(rep.abs_residual() <= *rep.tail_bound, std::string("x=") + xs + " K=" + std::to_string(k));
    }
  }
  return o;
}

Outcome c6(Context const& ctx) {
  Outcome o;
  if (!need_full(o, ctx)) return o;
  expl::VerifyRequest req;
  req.id = expl::Identity::cosine;
  req.x = 4;
  check_trend(o, "x=4", trend(req, ctx), kCosineCeiling);
  return o;
}

Outcome c7(Context const&) {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  HReal worst = 0;
  for (int i = 0; i < 50; ++i) {
    long const qq = den(rng);
    long const pp = std::uniform_int_distribution<long>(0, qq - 1)(rng);
    HComplex const z = mp::polar(HReal(radius(rng)), HReal(angle(rng)));
    Rational const u(pp, qq);
    HReal const diff = (expl::f_u_closed(u, z) - expl::f_u_series(mp::to_hreal(u), z)).abs();
    worst = hmax(worst, diff);
  }
  o.detail << " worst of 50=" << sci(worst);
  o.require(worst < kFuTol, "random points");

  HReal const oracle("0.197225");
  auto const fixed = expl::f_u_closed(q("1/2"), HComplex(HReal("0.25"))).re;
  auto const uncorrected = expl::f_u_uncorrected(q("1/2"), HComplex(HReal("0.25"))).re;
  auto const series = expl::f_u_series(HReal("0.5"), HComplex(HReal("0.25"))).re;
  o.detail << " u=1/2,z=1/4: series=" << mp::to_string(series, 8) << " corrected=" << mp::to_string(fixed, 8)
           << " uncorrected=" << mp::to_string(uncorrected, 8);
  o.require(bmp::abs(fixed - oracle) < HReal("1e-6"), "corrected form vs 0.197225");
  o.require(bmp::abs(uncorrected - oracle) > HReal("1e-3"), "uncorrected form unexpectedly matches");
  return o;
}

Outcome c8(Context const& ctx) {
  Outcome o;
  auto const inv_t = expl::partial_fractions({1}, {0});
  HReal worst = 0;
  for (auto const* xs : {"3/2", "2", "4", "21/2", "64"}) {
    HReal const g = expl::general_rhs_gt1(q(xs), inv_t) - mp::log_two_pi();
    HReal const f = expl::f_rhs_gt1(q(xs));
    worst = hmax(worst, bmp::abs(g - f) / bmp::abs(f));
  }
  o.detail << " alpha->0 rel=" << sci(worst);
  o.require(worst < kSpecialisationRel, "alpha -> 0 specialisation");
  if (!need_full(o, ctx)) return o;

  struct Case {
    char const* pf;
    char const* x;
  };
  // Below 1 the root 0 is excluded; 1/(t - 2) stands in for 1/(t(t - 1/2)).
  for (auto const& [pf, xs] : std::vector<Case>{{"1|1/2", "4"}, {"1|0,1/2", "4"}, {"1|1/2", "1/4"}, {"1|2", "1/4"}}) {
    expl::VerifyRequest req;
    req.id = expl::Identity::general;
    req.x = q(xs);
    req.pf = expl::parse_pf(pf);
    check_trend(o, req.pf->describe() + "@x=" + xs, trend(req, ctx), kGeneralCeiling);
  }
  return o;
}

Outcome c9(Context const&) {
  Outcome o;
  auto const zeta = expl::descriptor_zeta();
  struct Point {
    char const* x;
    char const* alpha;
  };
  std::vector<Point> const above{{"3/2", "1/2"}, {"2", "1/3"}, {"4", "-1/2"}, {"21/2", "2"},   {"9", "-3"},
                                 {"5", "3/4"},   {"7/3", "-7/5"}, {"100", "1/7"}, {"16", "5/2"}, {"64/3", "-2/3"}};
  std::vector<Point> const below{{"1/2", "1/2"}, {"1/4", "1/3"}, {"1/10", "-1/2"}, {"2/5", "2"}, {"1/9", "-3"},
                                 {"3/7", "3/4"}, {"1/100", "1/7"}, {"1/16", "0"},  {"2/3", "0"}, {"1/10", "0"}};
  HReal worst = 0;
  for (auto const& [xs, as] : above) {
    HReal const s = expl::selberg_rhs_gt1(q(xs), q(as), zeta).re;
    HReal const g = expl::general_rhs_gt1(q(xs), expl::partial_fractions({1}, {q(as)}));
    worst = hmax(worst, bmp::abs(s - g) / bmp::abs(g));
  }
  for (auto const& [xs, as] : below) {
    HReal const s = expl::selberg_rhs_lt1(q(xs), q(as), zeta).re;
    HReal const g = q(as) == 0 ? expl::f_rhs_lt1(q(xs))
                               : expl::general_rhs_lt1(q(xs), expl::partial_fractions({1}, {q(as)}));
    worst = hmax(worst, bmp::abs(s - g) / bmp::abs(g));
  }
  o.detail << " zeta grid(20) rel=" << sci(worst);
  o.require(worst < kSpecialisationRel, "zeta specialisation");

  // Character-weighted values from an independent implementation.
  auto const chi4 = expl::descriptor_dirichlet(arith::DirichletCharacter::conrey(4, 3));
  struct Case {
    char const* x;
    char const* alpha;
    char const* value;
  };
  std::vector<Case> const oracle{{"10", "1/4", "0.6502610134662382288742996301148359924611"},
                                 {"21/2", "1/2", "0.9833651671384246109076353544211268385729"},
                                 {"7/3", "-1/3", "0.6759388563887938614027763737190119673554"},
                                 {"100", "1/5", "1.005532633377421268251969515868027325881"},
                                 {"3", "2", "0.6684684568538087380751671650230574086635"}};
  HReal worst_chi = 0;
  for (auto const& [xs, as, v] : oracle) {
    worst_chi = hmax(worst_chi, bmp::abs(expl::selberg_rhs_gt1(q(xs), q(as), chi4).re - HReal(v)));
  }
  o.detail << " chi_4 points(5) abs=" << sci(worst_chi);
  o.require(worst_chi < kDirichletTol, "Dirichlet assembly");
  return o;
}

liconst::StieltjesTable const& stieltjes_table() {
  static auto const t = liconst::build_table(20);
  return t;
}

Outcome c10(Context const& ctx) {
  Outcome o;
  auto const& st = stieltjes_table();
  HReal const expected("0.0230957");
  o.detail << " identity lambda_1=" << mp::to_string(st.lambdas[0], 10);
  o.require(bmp::abs(st.lambdas[0] - expected) <= kLambda1Tol, "identity lambda_1");
  if (!need_full(o, ctx)) return o;
  HReal worst = 0;
  for (int n = 1; n <= 8; ++n) {
    auto const direct = zeros::li_lambda_direct(n, ctx.table, first(kPairs));
    HReal const gap = bmp::abs(direct.estimate() - st.lambdas[n - 1]);
    worst = hmax(worst, gap);
    if (n == 1) {
      o.detail << " direct lambda_1=" << mp::to_string(direct.estimate(), 10);
      o.require(bmp::abs(direct.estimate() - expected) <= kLambda1Tol, "direct lambda_1");
    }
  }
  o.detail << " worst gap n<=8=" << sci(worst);
  o.require(worst <= kLiGap, "direct vs identity");
  return o;
}

Outcome c11(Context const&) {
  Outcome o;
  auto const& st = stieltjes_table();
  HReal const tol = mp::ldexp(1, 40 - static_cast<long>(kBits));
  HReal worst = 0;
  bool bounds = true, positive = true;
  for (unsigned n = 1; n <= 20; ++n) {
    auto const& c = st.coffey[n - 1];
    worst = hmax(worst, bmp::abs(c.lambda() - st.lambdas[n - 1]));
    if (n >= 2) {
      bounds = bounds && c.bounds_ok && c.lower <= c.S1 && c.S1 <= c.upper;
      positive = positive && c.S1 >= 0;
    }
  }
  o.detail << " reassembly=" << sci(worst) << " bounds=" << (bounds ? "ok" : "violated")
           << " S1>=0=" << (positive ? "ok" : "violated");
  o.require(worst <= tol, "reassembly");
  o.require(bounds, "Coffey inequalities");
  o.require(positive, "S1 >= 0");
  return o;
}

Outcome c12(Context const&) {
  Outcome o;
  auto const& st = stieltjes_table();
  HReal const g0 = st.gammas[0].value;
  HReal const g1 = st.gammas[1].value;
  o.detail << " gamma_0=" << mp::to_string(g0, 12) << " gamma_1=" << mp::to_string(g1, 12);
  o.require(bmp::abs(g0 - HReal("0.5772156649")) <= kGamma0Tol, "gamma_0");
  o.require(bmp::abs(g1 - HReal("-0.0728158454")) <= kGamma1Tol, "gamma_1");
  HReal const tol = mp::ldexp(1, 40 - static_cast<long>(kBits));
  o.require(bmp::abs(st.etas[0] + g0) <= tol, "eta_0 = -gamma_0");
  HReal const claimed = -g1 + g0 * g0 / 2;
  o.detail << " eta_1=" << mp::to_string(st.etas[1], 12) << " -gamma_1+gamma_0^2/2=" << mp::to_string(claimed, 12)
           << " 2gamma_1+gamma_0^2=" << mp::to_string(2 * g1 + g0 * g0, 12);
  o.require(bmp::abs(st.etas[1] - claimed) <= tol, "eta_1 = -gamma_1 + gamma_0^2/2");
  return o;
}

Outcome c13(Context const&) {
  Outcome o;
  auto const recs = analysis::find_zeros_gt1(q("21/20"), 2);
  std::size_t genuine = 0, jumps = 0;
  bool first_ok = false, second_ok = false, jump_ok = false, residual_ok = true;
  for (auto const& r : recs) {
    if (r.kind == analysis::RootKind::genuine_zero) {
      ++genuine;
      residual_ok = residual_ok && r.residual < kRootResidual;
      first_ok = first_ok || (r.lo > q("23/20") && r.hi < q("6/5"));
      second_ok = second_ok || (r.lo > q("31/20") && r.hi < q("8/5"));
    } else {
      ++jumps;
      jump_ok = jump_ok || r.lo == 2;
    }
  }
  o.detail << " genuine=" << genuine << " jump=" << jumps;
  for (auto const& r : recs) o.detail << " " << analysis::to_string(r.kind) << "@" << mp::to_string(r.root, 10);
  o.require(genuine == 2 && first_ok && second_ok, "genuine zeros");
  o.require(residual_ok, "residuals");
  o.require(jumps == 1 && jump_ok, "jump at 2");
  return o;
}

Outcome c14(Context const&) {
  Outcome o;
  for (std::uint64_t d : {1, 2, 3, 7}) {
    auto const r = analysis::chowla_selberg_check(d);
    o.detail << " d=" << d << ":" << sci(r.rel_error());
    o.require(r.rel_error() < kChowlaRel, "d=" + std::to_string(d));
  }
  HReal const pi = mp::pi();
  HReal const g14 = mp::gamma_fn(HReal(1) / 4).value;
  HReal const g34 = mp::gamma_fn(HReal(3) / 4).value;
  HReal const formula = 2 * pi * bmp::pow(g34 / g14, 2);
  HReal const rhs = analysis::chowla_selberg_check(1).rhs;
  o.detail << " d=1 rhs=" << mp::to_string(rhs, 10) << " (quoted approximation 0.717767, off by "
           << sci(bmp::abs(rhs - HReal("0.717767"))) << ")";
  o.require(bmp::abs(rhs - formula) < kGammaProductTol, "d=1 Gamma product");
  HReal const product = bmp::abs(g14 * g34 - pi * bmp::sqrt(HReal(2)));
  o.detail << " Gamma(1/4)Gamma(3/4)-pi sqrt2=" << sci(product);
  o.require(product < kGammaProductTol, "reflection cross-check");
  return o;
}

Outcome c15(Context const&) {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t d = 1; d <= 50; ++d) {
    if (!arith::is_squarefree(d)) continue;
    auto const c = analysis::class_number_check(d);
    ++checked;
    o.require(c.agree(), "d=" + std::to_string(d));
  }
  o.detail << " squarefree d<=50: " << checked;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  mp::PrecisionScope precision(kBits);
  std::string path = argc > 1 ? argv[1] : "";
  if (path.empty()) {
    if (char const* env = std::getenv(zx::cli::kZerosEnv); env && *env) path = env;
  }
  if (path.empty()) path = ZX_DEFAULT_ZEROS;

  Context ctx{zeros::embedded_zeta_zeros(), false};
  try {
    ctx.table = zeros::load_zeros_file(path);
    ctx.full = ctx.table.size() >= kPairs && ctx.table.label() == "zeta";
  } catch (std::exception const& e) {
    std::cout << "zero table: " << e.what() << "\n";
  }
  std::cout << "zero table: " << ctx.table.source() << " (" << ctx.table.size() << " pairs), " << kBits << " bits\n";

  std::vector<std::pair<std::string, std::function<Outcome(Context const&)>>> const criteria{
      {"sum 1/rho", c1},          {"sum 1/|rho|^2", c2},      {"von Mangoldt", c3}, {"Ingham", c4},
      {"S identity", c5},         {"cosine identity", c6},    {"f_u lemma", c7},    {"general identity", c8},
      {"Selberg specialisation", c9}, {"Li pipeline", c10}, {"Coffey", c11},      {"Stieltjes and eta", c12},
      {"zero finder", c13},       {"Chowla-Selberg", c14},    {"class numbers", c15}};

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int const id = static_cast<int>(i + 1);
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const known = kKnownRed.count(id) > 0;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << id << " " << criteria[i].first << ":"
              << o.detail.str() << " (" << std::fixed << std::setprecision(2) << secs << "s)"
              << (known && !o.pass ? " [known: claimed closed form]" : "") << "\n";
    std::cout.unsetf(std::ios::fixed);
    if (!o.pass && !known) ++unexpected;
    if (o.pass && known) std::cout << "     note: criterion " << id << " listed as known-red now passes\n";
  }
  std::cout << (unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: unexpected failures") << " ("
            << unexpected << ")\n";
  return unexpected;
}
