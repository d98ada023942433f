#include "doctest.h"
#include "test_util.hpp"

#include "zx/analysis/chowla.hpp"
#include "zx/analysis/roots.hpp"
#include "zx/explicit/zeta_rhs.hpp"
#include "zx/arith/mangoldt.hpp"
#include "zx/mp/special.hpp"

#include <array>

using namespace zx;
using namespace zx::test;
using analysis::RootKind;
using mp::HReal;
using mp::Rational;
namespace bmp = boost::multiprecision;

namespace {

Rational q(std::string const& s) { return mp::parse_rational(s); }

std::size_t count_kind(std::vector<analysis::RootRecord> const& v, RootKind kind) {
  std::size_t n = 0;
  for (auto const& r : v) n += r.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("endpoint signs above 1") {
  CHECK(near(expl::f_rhs_gt1(q("23/20")), hr("0.0178"), HReal(1e-3)));
  CHECK(near(expl::f_rhs_gt1(q("6/5")), hr("-0.0451"), HReal(1e-3)));
  CHECK(near(expl::f_rhs_gt1(q("31/20")), hr("-0.0187"), HReal(1e-3)));
  CHECK(near(expl::f_rhs_gt1(q("8/5")), hr("0.0098"), HReal(1e-3)));
  CHECK(near(expl::f_rhs_gt1(q("19/10")), hr("0.224"), HReal(1e-3)));
  CHECK(near(expl::f_rhs_gt1(q("2")), hr("-0.0406"), HReal(1e-3)));
}

TEST_CASE("zeros on [1.05, 2]") {
  auto const recs = analysis::find_zeros_gt1(q("21/20"), q("2"));
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].kind == RootKind::genuine_zero);
  CHECK(recs[1].kind == RootKind::genuine_zero);
  CHECK(recs[2].kind == RootKind::jump_crossing);

  CHECK(recs[0].lo > q("23/20"));
  CHECK(recs[0].hi < q("6/5"));
  CHECK(recs[1].lo > q("31/20"));
  CHECK(recs[1].hi < q("8/5"));
  CHECK(near(recs[0].root, hr("1.1611998639321233724338348362956049365154"), HReal(1e-28)));
  CHECK(near(recs[1].root, hr("1.5834253060770718577216219509665725912787"), HReal(1e-28)));
  for (int i = 0; i < 2; ++i) {
    CHECK(recs[i].residual < HReal(1e-10));
    CHECK(recs[i].hi - recs[i].lo < analysis::ScanOptions{}.tol);
  }

  auto const& jump = recs[2];
  CHECK(jump.lo == 2);
  CHECK(jump.hi == 2);
  CHECK(jump.left_limit > 0);
  CHECK(jump.right_limit < 0);
  CHECK(near(jump.left_limit - jump.right_limit, bmp::log(HReal(2)), HReal(1e-50)));
  CHECK(near(jump.residual, hr("0.0406096204634276745496660305434098480087902"), HReal(1e-40)));
}

TEST_CASE("no sign change on [3, 3.5]") { CHECK(analysis::find_zeros_gt1(q("3"), q("7/2")).empty()); }

TEST_CASE("zero count is stable under a finer tolerance") {
  analysis::ScanOptions coarse;
  coarse.tol = q("1/1000000");
  auto fine = coarse;
  fine.tol = coarse.tol / 10;
  auto const a = analysis::find_zeros_gt1(q("21/20"), q("5"), coarse);
  auto const b = analysis::find_zeros_gt1(q("21/20"), q("5"), fine);
  CHECK(count_kind(a, RootKind::genuine_zero) == count_kind(b, RootKind::genuine_zero));
  CHECK(count_kind(a, RootKind::jump_crossing) == count_kind(b, RootKind::jump_crossing));
  for (auto const& r : b) {
    if (r.kind == RootKind::genuine_zero) CHECK(r.hi - r.lo < fine.tol);
  }
}

TEST_CASE("genuine brackets avoid prime powers and change sign") {
  analysis::ScanOptions opts;
  opts.tol = q("1/10000000000");
  for (auto const& r : analysis::find_zeros_gt1(q("21/20"), q("30"), opts)) {
    if (r.kind == RootKind::jump_crossing) {
      CHECK(arith::prime_power(r.lo).has_value());
      continue;
    }
    CHECK(mp::floor(r.lo) == mp::floor(r.hi));
    CHECK(r.residual < HReal(1e-9));
    CHECK(expl::f_rhs_gt1(r.lo) * expl::f_rhs_gt1(r.hi) < 0);
  }
}

TEST_CASE("zeros below 1 against an independent scan") {
  constexpr std::array<char const*, 9> kZeros{
      "0.1031575288830545649669136148490831818289", "0.1165696953538260212762319579795937957667",
      "0.1271404231218566340312287904048090858824", "0.168039075801382093200413920346528884918",
      "0.2324801185213875138376220791198530181613", "0.2773331432260908390019438242429515392104",
      "0.4070722553352579787504025992873427174669", "0.6260005134375846752046870514461786360298",
      "0.8557120277916635047096455432638261471403",
  };
  analysis::ScanOptions opts;
  auto const recs = analysis::find_zeros_lt1(q("1/10"), q("9/10"), opts);
  std::vector<HReal> genuine;
  std::vector<Rational> jumps;
  for (auto const& r : recs) {
    if (r.kind == RootKind::genuine_zero) {
      genuine.push_back(r.root);
      CHECK(r.residual < 10 * mp::to_hreal(opts.tol));
    } else {
      jumps.push_back(r.lo);
    }
  }
  REQUIRE(genuine.size() == kZeros.size());
  for (std::size_t i = 0; i < kZeros.size(); ++i) CHECK(near(genuine[i], hr(kZeros[i]), HReal(1e-28)));
  std::vector<Rational> const expected_jumps{q("1/9"), q("1/8"), q("1/7"), q("1/5"), q("1/4"), q("1/3"), q("1/2")};
  CHECK(jumps == expected_jumps);
}

TEST_CASE("values at reciprocal prime powers sit between the limits") {
  for (auto const* s : {"1/2", "1/3", "1/4"}) {
    CAPTURE(s);
    auto const [left, right] = analysis::one_sided_limits(q(s));
    CHECK(near((left + right) / 2, expl::f_rhs_lt1(q(s)), HReal(1e-50)));
    HReal const x = mp::to_hreal(q(s));
    CHECK(near(analysis::f_lt1_real(x), left, HReal(1e-50)));
    auto const pp = arith::prime_power(1 / q(s));
    CHECK(near(left - right, bmp::log(HReal(pp->prime)) * x, HReal(1e-50)));
  }
  CHECK_THROWS_AS(analysis::one_sided_limits(q("1/6")), std::domain_error);
  CHECK_THROWS_AS(analysis::one_sided_limits(q("6")), std::domain_error);
}

TEST_CASE("root scan argument checks") {
  CHECK_THROWS_AS(analysis::find_zeros_gt1(q("2"), q("3/2")), std::domain_error);
  CHECK_THROWS_AS(analysis::find_zeros_gt1(q("1"), q("2")), std::domain_error);
  CHECK_THROWS_AS(analysis::find_zeros_lt1(q("1/2"), q("1")), std::domain_error);
  analysis::ScanOptions tiny;
  tiny.tol = Rational(1) / Rational(mp::Integer(1) << 400);
  CHECK_THROWS_AS(analysis::find_zeros_gt1(q("3/2"), q("2"), tiny), std::domain_error);
}

TEST_CASE("L(1, chi) values") {
  HReal const pi = mp::pi();
  CHECK(near(analysis::L_one_chi(1), pi / 4, HReal(1e-50)));
  CHECK(near(analysis::L_one_chi(3), pi / (3 * bmp::sqrt(HReal(3))), HReal(1e-50)));
  CHECK(near(analysis::L_one_chi(1), hr("0.7853981634"), HReal(1e-10)));
  CHECK(near(analysis::L_one_chi(3), hr("0.6045997881"), HReal(1e-10)));
  for (std::uint64_t d : {1, 2, 3, 5, 7}) {
    CAPTURE(d);
    auto const data = arith::class_data(d);
    HReal const cnf = 2 * pi * data.h / (data.w * bmp::sqrt(HReal(data.D)));
    CHECK(near(cnf, analysis::L_one_chi(d), HReal(1e-8)));
  }
}

TEST_CASE("L'(1, chi) by differences") {
  auto const r = analysis::L_prime_one_chi(1);
  CHECK(near(r.value, hr("0.192901316796912429363189764028"), HReal(1e-20)));
  CHECK(abs_diff(r.coarse, r.fine) < HReal(1e-10));
  CHECK_THROWS_AS(analysis::L_prime_one_chi(1, HReal(0.25), HReal(1e-30)), std::runtime_error);
}

TEST_CASE("Chowla-Selberg") {
  HReal const pi = mp::pi();
  HReal const g14 = mp::gamma_fn(HReal(1) / 4).value;
  HReal const g34 = mp::gamma_fn(HReal(3) / 4).value;
  CHECK(near(g14 * g34, pi * bmp::sqrt(HReal(2)), HReal(1e-20)));

  auto const one = analysis::chowla_selberg_check(1);
  CHECK(one.D == 4);
  CHECK(one.w == 4);
  CHECK(near(one.rhs, 2 * pi * bmp::pow(g34 / g14, 2), HReal(1e-40)));
  CHECK(near(one.rhs, hr("0.71777001104612999782119322366577942665713"), HReal(1e-40)));

  auto const three = analysis::chowla_selberg_check(3);
  HReal const g13 = mp::gamma_fn(HReal(1) / 3).value;
  HReal const g23 = mp::gamma_fn(HReal(2) / 3).value;
  CHECK(near(three.rhs, 2 * pi * bmp::pow(g23 / g13, 3), HReal(1e-40)));

  for (std::uint64_t d : {1, 2, 3, 7, 11, 19}) {
    CAPTURE(d);
    auto const r = analysis::chowla_selberg_check(d);
    CHECK(r.rel_error() < HReal(1e-6));
    CHECK(r.rel_error() < HReal(1e-15));
  }
}

TEST_CASE("Chowla-Selberg ratio under doubled precision") {
  HReal base;
  {
    mp::PrecisionScope p(192);
    base = analysis::chowla_selberg_check(7).rel_error();
  }
  mp::PrecisionScope p(384);
  CHECK(abs_diff(analysis::chowla_selberg_check(7).rel_error(), base) < HReal(1e-8));
}

TEST_CASE("class numbers two ways") {
  std::size_t checked = 0;
  for (std::uint64_t d = 1; d <= 50; ++d) {
    if (!arith::is_squarefree(d)) continue;
    CAPTURE(d);
    auto const c = analysis::class_number_check(d);
    CHECK(c.agree());
    CHECK(abs_diff(c.analytic, HReal(c.h_analytic)) < HReal(1e-20));
    ++checked;
  }
  CHECK(checked == 31);
}

TEST_CASE("best rational approximation") {
  HReal const pi = mp::pi();
  CHECK(analysis::best_rational(pi, 10) == q("22/7"));
  CHECK(analysis::best_rational(pi, 200) == q("355/113"));
  CHECK(analysis::best_rational(HReal(0.375), 100) == q("3/8"));
  CHECK(analysis::best_rational(pi, 1) == q("3"));
}

TEST_CASE("theorem report for d = 1") {
  auto const t = analysis::theorem_report(1, q("1/10"), q("9/10"), 10'000);
  CHECK(t.candidates.size() == 9);
  CHECK_FALSE(t.rational_zero_found);
  CHECK(t.L1_prime_sign == 1);
  for (auto const& c : t.candidates) {
    CHECK(mp::to_hreal(c.nearest) > 0);
    CHECK(bmp::denominator(c.nearest) <= 10'000);
    CHECK(c.f_at_nearest >= 0);
  }
}
