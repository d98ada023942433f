#include "doctest.h"
#include "test_util.hpp"

#include "zx/explicit/fu.hpp"
#include "zx/explicit/selberg.hpp"
#include "zx/explicit/verify.hpp"
#include "zx/explicit/zeta_rhs.hpp"
#include "zx/mp/special.hpp"

#include <random>
#include <sstream>

using namespace zx;
using namespace zx::test;
using mp::HComplex;
using mp::HReal;
using mp::Rational;
namespace bmp = boost::multiprecision;

namespace {

Rational q(std::string const& s) { return mp::parse_rational(s); }

HReal cabs_diff(HComplex const& a, HComplex const& b) { return (a - b).abs(); }

}  // namespace

TEST_CASE("f_u closed form against the series") {
  auto const quarter = expl::f_u_closed(q("1/2"), HComplex(hr("0.25")));
  CHECK(near(quarter.re, hr("0.197224577336219382790490473845051409294981"), HReal(1e-40)));
  CHECK(near(quarter.im, HReal(0), HReal(1e-55)));
  CHECK(near(quarter.re, 2 * bmp::log(HReal(3)) - 2, HReal(1e-50)));

  // The uncorrected variant lands on (1/2) log 3 instead.
  auto const bad = expl::f_u_uncorrected(q("1/2"), HComplex(hr("0.25")));
  CHECK(near(bad.re, bmp::log(HReal(3)) / 2, HReal(1e-50)));
  CHECK(bad.re - quarter.re > HReal(0.3));

  CHECK(near(expl::f_u_closed(q("1/3"), HComplex(hr("0.1"))).re, hr("0.0796108390576836674315051807217860533126628"),
             HReal(1e-40)));
  CHECK(near(expl::f_u_closed(0, HComplex(hr("0.3"))).re, -bmp::log(hr("0.7")), HReal(1e-55)));
  CHECK(expl::f_u_closed(q("2/5"), HComplex()).abs() == 0);

  auto const shifted_up = expl::f_u_closed(q("7/3"), HComplex(hr("0.3"), hr("-0.4")));
  CHECK(near(shifted_up.re, hr("0.045479593947129424220763824342159375337962"), HReal(1e-40)));
  CHECK(near(shifted_up.im, hr("-0.173481304294519391299152610496487695261712"), HReal(1e-40)));
  auto const shifted_down = expl::f_u_closed(q("-1/2"), HComplex(hr("-0.5"), hr("0.6")));
  CHECK(near(shifted_down.re, hr("-0.98008389427130041923753145294797939259276"), HReal(1e-40)));
  CHECK(near(shifted_down.im, hr("0.897056345049825063358528227525755112011313"), HReal(1e-40)));

  CHECK_THROWS_AS(expl::f_u_closed(q("1/2"), HComplex(HReal(1))), std::domain_error);
  CHECK_THROWS_AS(expl::f_u_closed(q("1/2"), HComplex(hr("0.6"), hr("0.8"))), std::domain_error);
  CHECK_THROWS_AS(expl::f_u_closed(-2, HComplex(hr("0.5"))), std::domain_error);
}

TEST_CASE("f_u closed form: 50 random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  for (int i = 0; i < 50; ++i) {
    long const qq = den(rng);
    long const pp = std::uniform_int_distribution<long>(0, qq - 1)(rng);
    HReal const r(radius(rng));
    HReal const t(angle(rng));
    HComplex const z = mp::polar(r, t);
    Rational const u(pp, qq);
    CAPTURE(mp::to_string(u));
    CAPTURE(mp::to_string(r, 6));
    CAPTURE(mp::to_string(t, 6));
    CHECK(cabs_diff(expl::f_u_closed(u, z), expl::f_u_series(mp::to_hreal(u), z)) < HReal(1e-12));
  }
  // Shifted parameters k + p/q with k in [-1, 3].
  for (int i = 0; i < 20; ++i) {
    long const qq = den(rng);
    long const pp = std::uniform_int_distribution<long>(1, qq)(rng);
    long const k = std::uniform_int_distribution<long>(-1, 3)(rng);
    Rational const u = Rational(pp, qq) + k;
    if (u <= -1) continue;
    HComplex const z = mp::polar(HReal(radius(rng)), HReal(angle(rng)));
    CAPTURE(mp::to_string(u));
    CHECK(cabs_diff(expl::f_u_closed(u, z), expl::f_u_series(mp::to_hreal(u), z)) < HReal(1e-30));
  }
}

TEST_CASE("partial fractions") {
  auto const inv_t = expl::partial_fractions({1}, {0});
  REQUIRE(inv_t.degree() == 1);
  CHECK(inv_t.terms()[0].residue == 1);

  auto const two = expl::partial_fractions({1}, {0, 1});
  CHECK(two.terms()[0].residue == -1);
  CHECK(two.terms()[1].residue == 1);

  auto const lin = expl::partial_fractions({0, 1}, {-1, 2});
  CHECK(lin.terms()[0].residue == q("1/3"));
  CHECK(lin.terms()[1].residue == q("2/3"));
  HComplex const five(HReal(5));
  CHECK(cabs_diff(lin.evaluate(five), HComplex(HReal(5) / 18)) < HReal(1e-55));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-5, 5);
  auto const cubic = expl::partial_fractions({q("1/2"), -3, 2}, {q("-1/3"), q("1/2"), 4});
  for (int i = 0; i < 5; ++i) {
    HComplex const t(HReal(coord(rng)), HReal(coord(rng)));
    CHECK(cabs_diff(cubic.evaluate(t), cubic.evaluate_quotient(t)) < HReal(1e-50) * (1 + cubic.evaluate(t).abs()));
  }

  CHECK_THROWS_AS(expl::partial_fractions({1}, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(expl::partial_fractions({1, 1}, {1}), std::domain_error);
  CHECK_THROWS_AS(expl::partial_fractions({0}, {1}), std::domain_error);
  CHECK(expl::parse_pf("1|0,1/2").terms()[1].residue == 2);
  CHECK_THROWS_AS(expl::parse_pf("1"), std::invalid_argument);
}

TEST_CASE("zeta closed forms, x > 1") {
  CHECK(near(expl::f_rhs_gt1(q("3/2")), hr("-0.0439837339582859794657939025018033948381051"), HReal(1e-40)));
  CHECK(near(expl::f_rhs_gt1(q("11/10")), hr("0.137756987527313562250985114971041302956624"), HReal(1e-40)));
  CHECK(near(expl::f_rhs_gt1(2), hr("-0.0406096204634276745496660305434098480087902"), HReal(1e-40)));
  CHECK(near(expl::f_rhs_gt1(q("21/2")), hr("0.834664593260813446783749460816496844037733"), HReal(1e-40)));
  CHECK_THROWS_AS(expl::f_rhs_gt1(1), std::domain_error);

  CHECK(near(expl::cosine_rhs(q("3/2")), hr("0.00535921158725379055456679156091407457608417"), HReal(1e-40)));
  CHECK(near(expl::cosine_rhs(4), hr("-0.00211128073166187858236022590667351811263115"), HReal(1e-40)));
  for (auto const* s : {"3/2", "2", "4", "21/2", "7", "1000/3"}) {
    CAPTURE(s);
    CHECK(near(expl::cosine_rhs(q(s)), expl::cosine_rhs(q(s), expl::CosineRoute::via_f), HReal(1e-50)));
  }

  CHECK(near(expl::S_rhs_gt1(4), hr("-0.475208154660109716030109339331721480671105"), HReal(1e-40)));
  CHECK(near(expl::S_rhs_gt1(2), hr("0.658934386437890153489900023158034874953264"), HReal(1e-40)));
  CHECK(near(expl::S_rhs_gt1(q("101/100")), hr("1.28524925008018855738685693634060611029482"), HReal(1e-40)));
}

TEST_CASE("zeta closed forms, 0 < x < 1") {
  HReal const half = bmp::log(HReal(2)) / 4 - bmp::log(HReal(2)) + mp::euler_gamma() - bmp::log(HReal(3)) / 2 + HReal(0.5);
  CHECK(near(expl::f_rhs_lt1(q("1/2")), half, HReal(1e-50)));
  CHECK(near(expl::f_rhs_lt1(q("1/2")), hr("0.00804913514751903284596538052750715266178896"), HReal(1e-40)));
  CHECK(near(expl::f_rhs_lt1(q("1/10")), hr("-0.0310541178991194991803879862040438191231301"), HReal(1e-40)));
  CHECK(near(expl::f_rhs_lt1(q("1/100")), hr("-0.0423303545643927195959333734908263813129269"), HReal(1e-40)));
  CHECK(bmp::abs(expl::f_rhs_lt1(q("1/100"))) < 2);
  CHECK_THROWS_AS(expl::f_rhs_lt1(1), std::domain_error);
  CHECK_THROWS_AS(expl::f_rhs_lt1(0), std::domain_error);
  CHECK(expl::trivial_series_lt1(0, q("1/2")) == 0);
}

TEST_CASE("general partial-fraction forms") {
  auto const inv_t = expl::partial_fractions({1}, {0});
  for (auto const* s : {"3/2", "2", "9", "21/2", "64"}) {
    CAPTURE(s);
    CHECK(rel_near(expl::general_rhs_gt1(q(s), inv_t) - mp::log_two_pi(), expl::f_rhs_gt1(q(s)), HReal(1e-20)));
  }
  auto const shifted = expl::partial_fractions({1}, {q("1/2")});
  CHECK(near(expl::general_rhs_gt1(4, shifted), hr("5.43050757172607412302846437039133473297628"), HReal(1e-40)));
  auto const two = expl::partial_fractions({1}, {0, q("1/2")});
  CHECK(two.terms()[0].residue == -2);
  CHECK(two.terms()[1].residue == 2);
  CHECK(near(expl::general_rhs_gt1(4, two), hr("7.07314274133063238542619166331825765134513"), HReal(1e-40)));

  // Linear in the residues.
  auto const a = expl::partial_fractions({1, 2}, {q("1/3"), -1});
  auto const b = expl::partial_fractions({-1}, {q("1/3"), -1});
  auto const sum = expl::partial_fractions({0, 2}, {q("1/3"), -1});
  for (auto const* s : {"5/2", "8", "49/3"}) {
    CHECK(near(expl::general_rhs_gt1(q(s), a) + expl::general_rhs_gt1(q(s), b), expl::general_rhs_gt1(q(s), sum),
               HReal(1e-45)));
  }

  CHECK(near(expl::general_rhs_lt1(q("1/4"), shifted), hr("-1.35762689293151853075711609259783368324407"), HReal(1e-40)));
  CHECK(near(expl::general_rhs_lt1(q("1/4"), expl::partial_fractions({1}, {2})),
             hr("-0.136686701477430314359255803221971723824661"), HReal(1e-40)));

  CHECK_THROWS_AS(expl::general_rhs_gt1(4, expl::partial_fractions({1}, {1})), std::domain_error);
  CHECK_THROWS_AS(expl::general_rhs_gt1(4, expl::partial_fractions({1}, {-4})), std::domain_error);
  CHECK_NOTHROW(expl::general_rhs_gt1(4, expl::partial_fractions({1}, {-3})));
  CHECK_THROWS_AS(expl::general_rhs_lt1(q("1/4"), inv_t), std::domain_error);
  CHECK_THROWS_AS(expl::general_rhs_lt1(q("1/4"), expl::partial_fractions({1}, {3})), std::domain_error);
  CHECK_THROWS_AS(expl::general_rhs_lt1(q("1/4"), two), std::domain_error);
}

TEST_CASE("descriptors") {
  auto const zeta = expl::descriptor_zeta();
  CHECK(near(zeta.d_F(), HReal(1), HReal(1e-55)));
  CHECK(near(zeta.q_F(), HReal(1), HReal(1e-50)));
  CHECK(zeta.theta_F() == 0);
  CHECK_NOTHROW(zeta.validate());

  auto const chi4 = expl::descriptor_dirichlet(arith::DirichletCharacter::conrey(4, 3));
  CHECK(chi4.label == "4.3");
  CHECK(chi4.m_F == 0);
  CHECK(near(chi4.d_F(), HReal(1), HReal(1e-55)));
  CHECK(near(chi4.q_F(), HReal(4), HReal(1e-50)));
  CHECK(near(chi4.w.abs(), HReal(1), HReal(1e-50)));
  CHECK(chi4.gamma_factors[0].mu == q("1/2"));
  REQUIRE(chi4.gamma_F.has_value());
  CHECK(near(chi4.gamma_F->re, hr("0.2456095847773141723888166261790625184335"), HReal(1e-18)));

  CHECK_THROWS_AS(expl::descriptor_dirichlet(arith::DirichletCharacter::conrey(8, 7)), std::domain_error);
  auto bad = zeta;
  bad.w = HComplex(HReal(2));
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  bad = zeta;
  bad.Q = HReal(1);
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  CHECK_NOTHROW(bad.validate(false));
}

TEST_CASE("descriptor files") {
  auto const zeta = expl::load_descriptor_file(std::string(ZX_DATA_DIR) + "/zeta.desc");
  CHECK(zeta.label == "zeta");
  CHECK(zeta.m_F == 1);
  CHECK(near(zeta.q_F(), HReal(1), HReal(1e-45)));
  auto const chi4 = expl::load_descriptor_file(std::string(ZX_DATA_DIR) + "/chi4.desc");
  CHECK(chi4.label == "4.3");
  CHECK(near(chi4.q_F(), HReal(4), HReal(1e-45)));

  auto parse = [](std::string const& text) {
    std::istringstream in(text);
    return expl::parse_descriptor(in);
  };
  std::string const ok = "label: z\nm_F: 1\nQ: sqrt(1/pi)\ngamma_factors: (1/2, 0)\ncoefficients: builtin:zeta\n";
  CHECK(parse(ok).label == "z");
  CHECK_THROWS_AS(parse(ok + "label: again\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse(ok + "colour: red\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("label: z\nm_F: 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("label: z\nm_F: 1\nQ: 2\ngamma_factors: (1/2, 0)\ncoefficients: builtin:zeta\n"),
                  std::domain_error);
  CHECK_THROWS_AS(parse("label: z\nm_F: 0\nQ: sqrt(8/pi)\ngamma_factors: (1/2, 1/2)\ncoefficients: dirichlet:8,7\n"),
                  std::domain_error);
  CHECK_THROWS_AS(expl::load_descriptor_file("/nonexistent.desc"), std::ios_base::failure);
}

TEST_CASE("Dirichlet log-derivative") {
  auto const chi = arith::DirichletCharacter::conrey(4, 3);
  CHECK(near(arith::dirichlet_log_derivative(HReal(2), chi).re, hr("0.08906528436788503775577121532873506418642"), HReal(1e-18)));
  CHECK(near(arith::dirichlet_log_derivative(HReal(0.5), chi).re, hr("0.4221482022579908624679249356269431343332"), HReal(1e-18)));
  CHECK(near(arith::dirichlet_log_derivative(HReal(-0.5), chi).re, hr("1.838729377856771863041724114884245897405"), HReal(1e-18)));
  CHECK(near(arith::dirichlet_log_derivative(HReal(-2), chi).re, hr("-0.5037907263021777205405790668293157577489"), HReal(1e-18)));
  CHECK_THROWS_AS(arith::dirichlet_log_derivative(HReal(-1), chi), std::domain_error);
  CHECK(near(arith::dirichlet_l(HReal(1), arith::DirichletCharacter::conrey(3, 2)).re,
             hr("0.6045997880780726168646927525473852440947"), HReal(1e-40)));
  CHECK(near(arith::dirichlet_l(HReal(1), chi).re, mp::pi() / 4, HReal(1e-50)));
  // (pi/4)(gamma + 2 log 2 + 3 log pi - 4 log Gamma(1/4))
  HReal const closed = mp::pi() / 4 *
                       (mp::euler_gamma() + 2 * bmp::log(HReal(2)) + 3 * bmp::log(mp::pi()) - 4 * mp::log_gamma(HReal(0.25)));
  CHECK(near(arith::dirichlet_l_prime(HReal(1), chi).re, closed, HReal(1e-20)));
}

TEST_CASE("Selberg forms specialise to zeta") {
  auto const zeta = expl::descriptor_zeta();
  struct Point {
    char const* x;
    char const* alpha;
  };
  std::vector<Point> const above{{"3/2", "1/2"}, {"2", "1/3"}, {"4", "-1/2"}, {"21/2", "2"},   {"9", "-3"},
                                 {"5", "3/4"},   {"7/3", "-7/5"}, {"100", "1/7"}, {"16", "5/2"}, {"64/3", "-2/3"}};
  std::vector<Point> const below{{"1/2", "1/2"}, {"1/4", "1/3"}, {"1/10", "-1/2"}, {"2/5", "2"},    {"1/9", "-3"},
                                 {"3/7", "3/4"}, {"1/100", "1/7"}, {"1/16", "0"},  {"2/3", "0"}, {"1/10", "0"}};
  for (auto const& [xs, as] : above) {
    CAPTURE(xs);
    CAPTURE(as);
    auto const pf = expl::partial_fractions({1}, {q(as)});
    auto const s = expl::selberg_rhs_gt1(q(xs), q(as), zeta);
    CHECK(rel_near(s.re, expl::general_rhs_gt1(q(xs), pf), HReal(1e-20)));
    CHECK(bmp::abs(s.im) < HReal(1e-50));
  }
  for (auto const& [xs, as] : below) {
    CAPTURE(xs);
    CAPTURE(as);
    auto const s = expl::selberg_rhs_lt1(q(xs), q(as), zeta);
    HReal const expected = q(as) == 0 ? expl::f_rhs_lt1(q(xs)) : expl::general_rhs_lt1(q(xs), expl::partial_fractions({1}, {q(as)}));
    CHECK(rel_near(s.re, expected, HReal(1e-20)));
  }
  CHECK_THROWS_AS(expl::selberg_rhs_gt1(4, 0, zeta), std::domain_error);
  CHECK_THROWS_AS(expl::selberg_rhs_gt1(4, -2, zeta), std::domain_error);
  auto no_gamma = zeta;
  no_gamma.gamma_F.reset();
  CHECK_THROWS_AS(expl::selberg_rhs_lt1(q("1/4"), 0, no_gamma), std::domain_error);
}

TEST_CASE("Selberg forms for Dirichlet characters") {
  auto const chi4 = expl::descriptor_dirichlet(arith::DirichletCharacter::conrey(4, 3));
  struct Case {
    char const* x;
    char const* alpha;
    char const* value;
  };
  std::vector<Case> const above{{"10", "1/4", "0.6502610134662382288742996301148359924611"},
                                {"21/2", "1/2", "0.9833651671384246109076353544211268385729"},
                                {"7/3", "-1/3", "0.6759388563887938614027763737190119673554"},
                                {"100", "1/5", "1.005532633377421268251969515868027325881"},
                                {"3", "2", "0.6684684568538087380751671650230574086635"}};
  for (auto const& [xs, as, v] : above) {
    CAPTURE(xs);
    auto const s = expl::selberg_rhs_gt1(q(xs), q(as), chi4);
    CHECK(near(s.re, hr(v), HReal(1e-15)));
    CHECK(bmp::abs(s.im) < HReal(1e-50));
  }
  CHECK(near(expl::selberg_rhs_lt1(q("1/4"), q("1/3"), chi4).re, hr("-0.3713290210917590228191564427670081695823"),
             HReal(1e-15)));
  CHECK(near(expl::selberg_rhs_lt1(q("1/10"), q("-1/2"), chi4).re, hr("-0.4209859477196923594139371561698903131732"),
             HReal(1e-15)));
  CHECK(near(expl::selberg_rhs_lt1(q("1/10"), 0, chi4).re, hr("0.04034877103815566282066060360210591660068"),
             HReal(1e-15)));
  auto const chi3 = expl::descriptor_dirichlet(arith::DirichletCharacter::conrey(3, 2));
  CHECK(near(expl::selberg_rhs_lt1(q("1/10"), 0, chi3).re, hr("0.05942583699735659967632852645348472423501"),
             HReal(1e-15)));
  // alpha = -1 is the trivial zero at mu/lambda + alpha = 0.
  CHECK_THROWS_AS(expl::selberg_rhs_gt1(4, -1, chi4), std::domain_error);

  // chi(2^k) = 0, chi(3) = chi(7) = -1, chi(5) = chi(9) = 1.
  HReal const hand = bmp::log(HReal(5)) - bmp::log(HReal(3)) - bmp::log(HReal(7)) + bmp::log(HReal(3));
  CHECK(near(expl::psi0_F(10, 0, chi4).re, hand, HReal(1e-50)));
  HReal const half = bmp::log(HReal(5)) - bmp::log(HReal(3)) - bmp::log(HReal(7)) + bmp::log(HReal(3)) / 2;
  CHECK(near(expl::psi0_F(9, 0, chi4).re, half, HReal(1e-50)));
}

TEST_CASE("verify_identity plumbing") {
  auto const table = zeros::embedded_zeta_zeros();
  expl::VerifyRequest r;
  r.id = expl::Identity::S;
  r.x = 4;
  auto const rep = expl::verify_identity(r, table, zeros::SumSpec::first(100));
  CHECK(rep.terms_used == 100);
  CHECK(rep.residual.re == rep.lhs.re - rep.rhs.re);
  REQUIRE(rep.tail_bound.has_value());
  CHECK(rep.abs_residual() < *rep.tail_bound);
  REQUIRE(rep.trend.has_value());
  CHECK(rep.trend->coarse_terms == 10);
  CHECK(rep.trend->decreasing);
  CHECK(rep.bits == mp::current_bits());

  r.id = expl::Identity::von_mangoldt;
  r.x = q("21/2");
  CHECK(expl::verify_identity(r, table, zeros::SumSpec::first(100)).abs_residual() < HReal(0.01));
  r.id = expl::Identity::general;
  CHECK_THROWS_AS(expl::verify_identity(r, table, zeros::SumSpec::first(100)), std::invalid_argument);

  CHECK(expl::parse_identity("von-mangoldt") == expl::Identity::von_mangoldt);
  CHECK(expl::to_string(expl::Identity::ingham) == "ingham");
  CHECK_THROWS_AS(expl::parse_identity("riemann"), std::invalid_argument);

  auto const chi_table = zeros::load_zeros_file(data_path("chi4_zeros_10.txt"));
  CHECK(chi_table.label() == "4.3");
  r.id = expl::Identity::selberg;
  r.F = expl::descriptor_zeta();
  r.x = 4;
  r.alpha = q("1/3");
  CHECK_THROWS_AS(expl::verify_identity(r, chi_table, zeros::SumSpec::first(10)), std::invalid_argument);
  r.F = expl::descriptor_dirichlet(arith::DirichletCharacter::conrey(4, 3));
  CHECK_THROWS_AS(expl::verify_identity(r, table, zeros::SumSpec::first(10)), std::invalid_argument);
  auto const chi_rep = expl::verify_identity(r, chi_table, zeros::SumSpec::first(10));
  CHECK(chi_rep.abs_residual() < HReal(0.05));
  r.x = q("1/4");
  r.alpha = 0;
  CHECK(expl::verify_identity(r, chi_table, zeros::SumSpec::first(10)).abs_residual() < HReal(0.05));
}
