#include "zx/mp/rational.hpp"

#include <regex>
#include <stdexcept>

namespace zx::mp {

Rational parse_rational(std::string const& text) {
  static std::regex const pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw std::invalid_argument("not an exact rational (expected p/q or an integer): '" + text + "'");
  }
  Integer num(m[1].str());
  Integer den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(Rational const& r) {
  auto const num = boost::multiprecision::numerator(r);
  auto const den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

HReal to_hreal(Rational const& r) {
  HReal out;
  mpfr_set_q(out.backend().data(), r.backend().data(), MPFR_RNDN);
  return out;
}

Rational to_rational(HReal const& x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x.backend().data());
  Rational out(q);
  mpq_clear(q);
  return out;
}

bool is_integer(Rational const& r) { return boost::multiprecision::denominator(r) == 1; }

Integer floor(Rational const& r) {
  Integer const num = boost::multiprecision::numerator(r);
  Integer const den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(Rational const& r) {
  Integer f = floor(r);
  if (!is_integer(r)) f += 1;
  return f;
}

std::uint64_t floor_u64(Rational const& r) {
  Integer const f = floor(r);
  if (f < 0 || f > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw std::out_of_range("floor of " + to_string(r) + " does not fit in 64 bits");
  }
  return f.convert_to<std::uint64_t>();
}

}  // namespace zx::mp
