#include "zx/explicit/selberg.hpp"

#include "zx/arith/mangoldt.hpp"
#include "zx/explicit/fu.hpp"
#include "zx/mp/special.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zx::expl {

namespace bmp = boost::multiprecision;

namespace {

HReal real_pow(HReal const& x, Rational const& a) {
  if (a == 0) return HReal(1);
  return bmp::exp(mp::to_hreal(a) * bmp::log(x));
}

std::string trim(std::string s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

HComplex parse_complex(std::string const& text) {
  auto const comma = text.find(',');
  if (comma == std::string::npos) return HComplex(mp::from_string(trim(text)));
  return {mp::from_string(trim(text.substr(0, comma))), mp::from_string(trim(text.substr(comma + 1)))};
}

HReal parse_conductor_scale(std::string const& text) {
  static std::regex const root_form(R"(sqrt\(\s*([-0-9/]+)\s*/\s*pi\s*\))");
  std::smatch m;
  if (std::regex_match(text, m, root_form)) return bmp::sqrt(mp::to_hreal(mp::parse_rational(m[1].str())) / mp::pi());
  return mp::from_string(text);
}

std::vector<GammaFactor> parse_gamma_factors(std::string const& text) {
  static std::regex const pair(R"(\(\s*([-0-9/]+)\s*,\s*([-0-9/]+)\s*\))");
  std::vector<GammaFactor> out;
  for (std::sregex_iterator it(text.begin(), text.end(), pair), end; it != end; ++it) {
    out.push_back({mp::parse_rational((*it)[1].str()), mp::parse_rational((*it)[2].str())});
  }
  if (out.empty()) throw std::invalid_argument("descriptor: gamma_factors must be a list of (lambda, mu) pairs");
  return out;
}

void require_gt1(Rational const& x, char const* who) {
  if (!(x > 1)) throw std::domain_error(std::string(who) + ": x > 1 required, got " + mp::to_string(x));
}

void require_unit(Rational const& x, char const* who) {
  if (!(x > 0 && x < 1)) throw std::domain_error(std::string(who) + ": 0 < x < 1 required, got " + mp::to_string(x));
}

// sum_{n <= y} Lambda_F(n) n^(-s), with the term n = y halved when y is an integer.
HComplex weighted_sum(Rational const& y, Rational const& s, SelbergDescriptor const& F) {
  if (!F.coefficients) throw std::domain_error("descriptor " + F.label + " has no coefficient provider");
  std::uint64_t const top = mp::floor_u64(y);
  bool const at_integer = mp::is_integer(y);
  HReal const sr = mp::to_hreal(s);
  HComplex acc;
  arith::for_each_prime_power(top, [&](std::uint64_t p, unsigned k, std::uint64_t n, HReal const& log_p) {
    HComplex term = F.coefficients(p, k, log_p);
    if (s != 0) term *= HComplex(bmp::exp(-sr * k * log_p));
    if (at_integer && n == top) term *= HComplex(HReal(0.5));
    acc += term;
  });
  return acc;
}

}  // namespace

HReal SelbergDescriptor::d_F() const {
  Rational sum = 0;
  for (auto const& g : gamma_factors) sum += g.lambda;
  return mp::to_hreal(2 * sum);
}

HReal SelbergDescriptor::q_F() const {
  HReal value = bmp::pow(2 * mp::pi(), d_F()) * Q * Q;
  for (auto const& g : gamma_factors) {
    HReal const l = mp::to_hreal(g.lambda);
    value *= bmp::pow(l, 2 * l);
  }
  return value;
}

HReal SelbergDescriptor::theta_F() const {
  // Imaginary parts of real mu_j vanish.
  return HReal(0);
}

void SelbergDescriptor::validate(bool arithmetic) const {
  auto fail = [&](std::string const& why) { throw std::domain_error("descriptor " + label + ": " + why); };
  if (gamma_factors.empty()) fail("at least one gamma factor required");
  for (auto const& g : gamma_factors) {
    if (g.lambda <= 0) fail("lambda_j must be positive");
    if (g.mu < 0) fail("mu_j must be non-negative");
  }
  if (!(Q > 0)) fail("Q must be positive");
  if (bmp::abs(w.abs() - 1) > mp::ldexp(1, 24 - static_cast<long>(mp::current_bits()))) fail("|w| must be 1");
  if (!coefficients) fail("missing coefficient provider");
  if (arithmetic) {
    HReal const q = q_F();
    if (bmp::abs(q - bmp::round(q)) > HReal(1e-20) || q < HReal(0.5)) {
      fail("conductor " + mp::to_string(q, 20) + " is not a natural number");
    }
  }
}

SelbergDescriptor descriptor_zeta() {
  SelbergDescriptor F;
  F.label = "zeta";
  F.dual_label = "zeta";
  F.m_F = 1;
  F.Q = 1 / bmp::sqrt(mp::pi());
  F.gamma_factors = {{Rational(1, 2), Rational(0)}};
  F.coefficient_source = "builtin:zeta";
  F.coefficients = [](std::uint64_t, unsigned, HReal const& log_p) { return HComplex(log_p); };
  F.gamma_F = HComplex(mp::euler_gamma());
  F.log_derivative = [](HReal const& s) { return HComplex(mp::zeta_log_derivative(s)); };
  return F;
}

SelbergDescriptor descriptor_dirichlet(arith::DirichletCharacter const& chi) {
  if (!chi.is_primitive()) {
    throw std::domain_error("descriptor_dirichlet: character " + chi.label() + " is not primitive");
  }
  if (chi.modulus() == 1) return descriptor_zeta();
  SelbergDescriptor F;
  F.label = chi.label();
  F.dual_label = chi.conjugate().label();
  F.m_F = 0;
  F.Q = bmp::sqrt(HReal(chi.modulus()) / mp::pi());
  F.gamma_factors = {{Rational(1, 2), Rational(chi.parity(), 2)}};
  F.w = chi.root_number();
  F.coefficient_source = "dirichlet:" + std::to_string(chi.modulus()) + "," + std::to_string(chi.index());
  F.coefficients = [chi](std::uint64_t p, unsigned k, HReal const& log_p) {
    HComplex const c = chi.value(static_cast<std::int64_t>(p));
    HComplex v(HReal(1));
    for (unsigned i = 0; i < k; ++i) v *= c;
    return v * HComplex(log_p);
  };
  F.real_coefficients = chi.is_real();
  F.log_derivative = [chi](HReal const& s) { return arith::dirichlet_log_derivative(s, chi); };
  F.gamma_F = F.log_derivative(HReal(1));
  return F;
}

SelbergDescriptor parse_descriptor(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto const colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("descriptor line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (!fields.emplace(key, value).second) {
      throw std::invalid_argument("descriptor line " + std::to_string(line_no) + ": duplicate key " + key);
    }
  }
  for (auto const* key : {"label", "m_F", "Q", "gamma_factors", "coefficients"}) {
    if (!fields.count(key)) throw std::invalid_argument(std::string("descriptor: missing key ") + key);
  }
  static std::set<std::string> const known{"label", "dual_label", "m_F", "Q", "gamma_factors", "w", "coefficients", "gamma_F"};
  for (auto const& [key, value] : fields) {
    if (!known.count(key)) throw std::invalid_argument("descriptor: unknown key " + key);
  }

  SelbergDescriptor F;
  std::string const& source = fields["coefficients"];
  static std::regex const dirichlet(R"(dirichlet:\s*(\d+)\s*,\s*(\d+))");
  std::smatch m;
  if (source == "builtin:zeta") {
    F = descriptor_zeta();
  } else if (std::regex_match(source, m, dirichlet)) {
    F = descriptor_dirichlet(arith::DirichletCharacter::conrey(std::stoull(m[1].str()), std::stoull(m[2].str())));
  } else {
    throw std::invalid_argument("descriptor: coefficients must be builtin:zeta or dirichlet:q,index");
  }
  F.label = fields["label"];
  F.dual_label = fields.count("dual_label") ? fields["dual_label"] : (F.real_coefficients ? F.label : F.dual_label);
  Rational const m_F = mp::parse_rational(fields["m_F"]);
  if (!mp::is_integer(m_F) || m_F < 0) throw std::invalid_argument("descriptor: m_F must be a non-negative integer");
  F.m_F = static_cast<unsigned>(mp::floor_u64(m_F));
  F.Q = parse_conductor_scale(fields["Q"]);
  F.gamma_factors = parse_gamma_factors(fields["gamma_factors"]);
  if (fields.count("w")) F.w = parse_complex(fields["w"]);
  if (fields.count("gamma_F")) F.gamma_F = parse_complex(fields["gamma_F"]);
  F.validate();
  return F;
}

SelbergDescriptor load_descriptor_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open descriptor file " + path);
  return parse_descriptor(in);
}

HComplex psi0_F(Rational const& x, Rational const& alpha, SelbergDescriptor const& F) {
  require_gt1(x, "psi0_F");
  return weighted_sum(x, alpha, F) * HComplex(real_pow(mp::to_hreal(x), alpha));
}

HComplex T_F(Rational const& x, Rational const& alpha, SelbergDescriptor const& F) {
  require_unit(x, "T_F");
  return weighted_sum(1 / x, 1 - alpha, F) * HComplex(real_pow(mp::to_hreal(x), alpha));
}

HComplex selberg_rhs_gt1(Rational const& x, Rational const& alpha, SelbergDescriptor const& F) {
  require_gt1(x, "selberg_rhs_gt1");
  if (F.m_F > 0 && (alpha == 0 || alpha == 1)) {
    throw std::domain_error("selberg_rhs_gt1: alpha = " + mp::to_string(alpha) + " is a pole of F'/F");
  }
  HReal const xr = mp::to_hreal(x);
  HReal const log_x = bmp::log(xr);
  HComplex acc = -psi0_F(x, alpha, F);
  if (F.m_F > 0) acc += HComplex(F.m_F * (xr / mp::to_hreal(1 - alpha) - 1 / mp::to_hreal(alpha)));
  for (auto const& [lambda, mu] : F.gamma_factors) {
    Rational const shift = mu / lambda + alpha;
    if (shift == 0) throw std::domain_error("selberg_rhs_gt1: alpha is a trivial zero of F");
    HReal const scale = bmp::exp(-mp::to_hreal(mu / lambda) * log_x);
    HReal const z = bmp::exp(-log_x / mp::to_hreal(lambda));
    HComplex const f = f_u_closed(mu + alpha * lambda, HComplex(z));
    acc += HComplex(scale * mp::to_hreal(lambda)) * f + HComplex(scale / mp::to_hreal(shift));
  }
  return acc;
}

HComplex selberg_rhs_lt1(Rational const& x, Rational const& alpha, SelbergDescriptor const& F) {
  require_unit(x, "selberg_rhs_lt1");
  HReal const xr = mp::to_hreal(x);
  HReal const log_x = bmp::log(xr);

  if (alpha == 0) {
    HComplex gamma_F;
    if (F.gamma_F) {
      gamma_F = *F.gamma_F;
    } else if (F.m_F == 0 && F.log_derivative) {
      gamma_F = F.log_derivative(HReal(1));
    } else {
      throw std::domain_error("selberg_rhs_lt1: descriptor " + F.label + " has no gamma_F for the alpha = 0 formula");
    }
    HComplex acc = T_F(x, 0, F) + gamma_F + HComplex(F.m_F * (log_x + xr));
    for (auto const& [lambda, mu] : F.gamma_factors) {
      HReal const l = mp::to_hreal(lambda);
      HReal const scale = l * bmp::exp((1 + mp::to_hreal(mu / lambda)) * log_x);
      HReal const z = bmp::exp(log_x / l);
      HComplex const f = f_u_closed(lambda + mu, HComplex(z));
      acc -= HComplex(scale) * f + HComplex(scale / mp::to_hreal(lambda + mu));
    }
    return acc;
  }

  if (F.m_F > 0 && alpha == 1) throw std::domain_error("selberg_rhs_lt1: alpha = 1 is excluded");
  HComplex acc = T_F(x, alpha, F);
  if (F.m_F > 0) acc += HComplex(F.m_F * (xr / mp::to_hreal(1 - alpha) - 1 / mp::to_hreal(alpha)));
  for (auto const& [lambda, mu] : F.gamma_factors) {
    Rational const denom = mu + lambda - alpha * lambda;
    if (denom == 0) throw std::domain_error("selberg_rhs_lt1: 1 - alpha is a trivial zero of F");
    HReal const l = mp::to_hreal(lambda);
    HReal const scale = l * bmp::exp((1 + mp::to_hreal(mu / lambda)) * log_x);
    HReal const z = bmp::exp(log_x / l);
    HComplex const f = f_u_closed(denom, HComplex(z));
    acc -= HComplex(scale) * f + HComplex(scale / mp::to_hreal(denom));
  }
  return acc;
}

}  // namespace zx::expl
