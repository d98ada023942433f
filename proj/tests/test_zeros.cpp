#include "doctest.h"
#include "test_util.hpp"

#include "zx/zeros/sums.hpp"

#include <sstream>

using namespace zx;
using namespace zx::test;
using mp::HComplex;
using mp::HReal;
using zeros::SumSpec;
namespace bmp = boost::multiprecision;

namespace {

zeros::ZeroTable parse(std::string const& text, zeros::ZeroFormat format = zeros::ZeroFormat::plain) {
  std::istringstream in(text);
  return zeros::load_zeros(in, format);
}

std::size_t error_line(std::string const& text, zeros::ZeroFormat format = zeros::ZeroFormat::plain) {
  try {
    parse(text, format);
  } catch (zeros::ZeroParseError const& e) {
    return e.line();
  }
  return 0;
}

zeros::ZeroTable const& first100() {
  static auto const table = zeros::embedded_zeta_zeros();
  return table;
}

HReal quarter_plus(HReal const& g) { return HReal(0.25) + g * g; }

}  // namespace

TEST_CASE("load_zeros plain format") {
  auto const t = parse("14.134725\n21.022040\n25.010858\n");
  REQUIRE(t.size() == 3);
  CHECK(t[0].beta == HReal(0.5));
  CHECK(t[2].gamma == hr("25.010858"));
  CHECK(t.entry_precision() == 6);
  CHECK(t.label() == "zeta");
  CHECK(t.on_critical_line());

  CHECK(parse("# comment\n14.134725\n").size() == 1);
  CHECK(parse("# label: chi4\r\n6.020949\r\n10.243770\r\n").label() == "chi4");
  CHECK(parse("# label: chi4\r\n6.020949\r\n10.243770\r\n").size() == 2);

  CHECK_THROWS_AS(parse("21.0\n14.1\n"), zeros::ZeroParseError);
  CHECK(error_line("21.0\n14.1\n") == 2);
  CHECK(error_line("# c\n14.1\nabc\n") == 3);
  CHECK(error_line("14.1\n14.1\n") == 2);
  CHECK(error_line("-3.0\n") == 1);
}

TEST_CASE("load_zeros csv format") {
  auto const t = parse("beta,gamma\n0.5,14.134725\n0.6,20\n0.4,20\n", zeros::ZeroFormat::csv);
  REQUIRE(t.size() == 3);
  CHECK(t[1].beta == hr("0.6"));
  CHECK_FALSE(t.on_critical_line());
  CHECK(error_line("beta,gamma\n1.2,14\n", zeros::ZeroFormat::csv) == 2);
  CHECK(error_line("beta,gamma\n0,14\n", zeros::ZeroFormat::csv) == 2);
  CHECK(error_line("0.5,14\n", zeros::ZeroFormat::csv) == 1);
  CHECK(error_line("beta,gamma\n0.5,14,3\n", zeros::ZeroFormat::csv) == 2);
  CHECK(error_line("beta,gamma\n0.5,14\n0.5,14\n", zeros::ZeroFormat::csv) == 3);
  CHECK_THROWS_AS(zeros::load_zeros_file("/nonexistent/zeros.txt"), std::ios_base::failure);
}

TEST_CASE("embedded fixture") {
  auto const& t = first100();
  CHECK(t.size() == 100);
  CHECK(t.entry_precision() == 15);
  CHECK(t[0].gamma == hr("14.134725141734694"));
  CHECK(near(t[99].gamma, HReal(236.524229665816), HReal(1e-9)));
}

TEST_CASE("zero_sum matches hand sums") {
  auto const& t = first100();
  auto const inv = [](HComplex const& rho) { return HComplex(HReal(1)) / rho; };
  auto const three = zeros::zero_sum(t, SumSpec::first(3), inv);
  CHECK(three.terms_used == 3);
  CHECK(near(three.value, hr("0.008858503479071005084759685789948031454362"), HReal(1e-38)));

  // x^rho / rho at x = 1 reduces to 1/rho.
  auto const at_one = zeros::zero_sum(t, SumSpec::first(3), [&](HComplex const& rho) {
    return mp::pow(HReal(1), rho) / rho;
  });
  CHECK(near(at_one.value, three.value, HReal(1e-50)));

  // T strictly between the k-th and (k+1)-th ordinates gives exactly k pairs.
  for (std::size_t k = 1; k <= 5; ++k) {
    HReal const T = (t[k - 1].gamma + t[k].gamma) / 2;
    auto const r = zeros::zero_sum(t, SumSpec::up_to(T), [](HComplex const& rho) {
      return HComplex(HReal(1)) / (rho * (HComplex(HReal(1)) - rho));
    });
    HReal hand = 0;
    for (std::size_t i = 0; i < k; ++i) hand += 2 / quarter_plus(t[i].gamma);
    CHECK(r.terms_used == k);
    CHECK(r.height == t[k - 1].gamma);
    CHECK(near(r.value, hand, HReal(1e-50)));
  }
  CHECK_THROWS_AS(zeros::zero_sum(t, SumSpec::up_to(HReal(10)), inv), std::domain_error);
  SumSpec both = SumSpec::first(3);
  both.height = HReal(100);
  CHECK_THROWS_AS(zeros::zero_sum(t, both, inv), std::invalid_argument);
}

TEST_CASE("zero_sum ordering and blocking") {
  auto const& t = first100();
  auto const term = [](HComplex const& rho) { return mp::pow(HReal(7), rho) / rho; };
  auto spec = SumSpec::first(100);
  auto const up = zeros::zero_sum(t, spec, term).value;
  spec.ordering = zeros::Ordering::descending;
  auto const down = zeros::zero_sum(t, spec, term).value;
  CHECK(abs_diff(up, down) < mp::ldexp(1, 32 - 192) * bmp::abs(up));

  auto blocked = SumSpec::first(100);
  blocked.block_size = 7;
  auto const serial = zeros::zero_sum(t, blocked, term).value;
  blocked.deterministic = false;
  CHECK(zeros::zero_sum(t, blocked, term).value == serial);
  CHECK(zeros::zero_sum(t, blocked, term).value == zeros::zero_sum(t, blocked, term).value);
  CHECK(abs_diff(serial, up) < mp::ldexp(1, 32 - 192) * bmp::abs(up));
}

TEST_CASE("sum_inv_rho and sum_inv_rho_sq") {
  auto const& t = first100();
  auto const one = zeros::sum_inv_rho(t, SumSpec::first(1));
  CHECK(near(one.value, HReal(0.0049990), HReal(1e-7)));
  CHECK(near(one.value, 1 / quarter_plus(t[0].gamma), HReal(1e-55)));
  CHECK_THROWS_AS(zeros::sum_inv_rho(t, SumSpec::up_to(HReal(10))), std::domain_error);

  auto const sq = zeros::sum_inv_rho_sq(t, SumSpec::first(1));
  CHECK(near(sq.value, HReal(0.0099980), HReal(1e-7)));
  CHECK(near(sq.value, 2 / quarter_plus(t[0].gamma), HReal(1e-55)));
  CHECK(sq.tail_bound.has_value());

  // Off-line synthetic pair at the same height: strict inequality.
  zeros::ZeroTable const mixed("synthetic", {{hr("0.6"), HReal(10)}, {hr("0.4"), HReal(10)}}, "test", 0);
  auto const inv_sq = zeros::sum_inv_rho_sq(mixed, SumSpec::first(2)).value;
  auto const two_re = 2 * zeros::sum_inv_rho(mixed, SumSpec::first(2)).value;
  CHECK(inv_sq > two_re);
  CHECK(near(inv_sq - two_re, hr("0.4") * (1 / hr("100.16") - 1 / hr("100.36")), HReal(1e-50)));

  // On the line the two agree exactly up to rounding.
  auto const all = SumSpec::first(100);
  CHECK(rel_near(zeros::sum_inv_rho_sq(t, all).value, 2 * zeros::sum_inv_rho(t, all).value, HReal(1e-45)));
}

TEST_CASE("cosine_sum") {
  auto const& t = first100();
  auto const spec = SumSpec::first(100);
  CHECK(rel_near(zeros::cosine_sum(HReal(1), t, spec), zeros::sum_inv_rho_sq(t, spec).value, HReal(1e-45)));
  CHECK(near(zeros::cosine_sum(HReal(2), t, SumSpec::first(1)), hr("-0.009311712801477980098300996360068214914003"),
             HReal(1e-30)));
  zeros::ZeroTable const off("synthetic", {{HReal(0.5), HReal(10)}, {HReal(0.6), HReal(20)}}, "test", 0);
  CHECK_THROWS_AS(zeros::cosine_sum(HReal(2), off, SumSpec::first(2)), std::domain_error);
  CHECK_NOTHROW(zeros::cosine_sum(HReal(2), off, SumSpec::first(1)));
}

TEST_CASE("li_lambda_direct") {
  auto const& t = first100();
  auto const spec = SumSpec::first(100);
  CHECK(zeros::li_lambda_direct(1, t, spec).value == zeros::sum_inv_rho(t, spec).value);
  zeros::ZeroTable const unit("synthetic", {{HReal(0.5), HReal(1)}}, "test", 0);
  CHECK(near(zeros::li_lambda_direct(2, unit, SumSpec::first(1)).value, hr("2.56"), HReal(1e-50)));
  CHECK_THROWS_AS(zeros::li_lambda_direct(0, t, spec), std::domain_error);
  CHECK(zeros::li_lambda_direct(3, t, spec).tail_mass == 9 * zeros::li_lambda_direct(1, t, spec).tail_mass);
}

TEST_CASE("S_sum") {
  auto const& t = first100();
  auto const spec = SumSpec::first(100);
  HReal hand = 0;
  for (auto const& z : t.entries()) hand += 2 / quarter_plus(z.gamma);
  CHECK(near(zeros::S_sum(HReal(1), t, spec).value, hand, HReal(1e-48)));
  CHECK(near(zeros::S_sum(HReal(4), t, SumSpec::first(1)).value, hr("0.01469425829882369798234190103658880284697"),
             HReal(1e-30)));
  CHECK_THROWS_AS(zeros::S_sum(HReal(0.5), t, spec), std::domain_error);

  CHECK(*zeros::tail_estimate(HReal(5000), HReal(2), HReal(4)) < *zeros::tail_estimate(HReal(1000), HReal(2), HReal(4)));

  // Truncations are Cauchy within the tail bound.
  for (double x : {2.0, 10.0, 100.0}) {
    for (std::size_t k1 : {5, 20, 50}) {
      auto const s1 = zeros::S_sum(HReal(x), t, SumSpec::first(k1));
      for (std::size_t k2 : {60, 80, 100}) {
        auto const s2 = zeros::S_sum(HReal(x), t, SumSpec::first(k2));
        CAPTURE(x);
        CAPTURE(k1);
        CHECK(bmp::abs(s2.value - s1.value) <= *s1.tail_bound);
      }
    }
  }
}

TEST_CASE("tail_estimate") {
  auto const t = zeros::tail_estimate(HReal(9877), HReal(2), HReal(1));
  REQUIRE(t.has_value());
  CHECK(near(*t, hr("0.0005388474946720444102713748608088745565713"), HReal(1e-35)));
  CHECK(*zeros::tail_estimate(HReal(1e12), HReal(3), HReal(1)) < HReal(1e-20));
  CHECK_FALSE(zeros::tail_estimate(HReal(100), HReal(1), HReal(1)).has_value());
  CHECK(near(zeros::density_tail(HReal(9877), HReal(1)), *t / 4, HReal(1e-40)));
}
