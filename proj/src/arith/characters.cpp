#include "zx/arith/characters.hpp"

#include "zx/mp/special.hpp"

#include <numeric>
#include <stdexcept>

namespace zx::arith {

namespace bmp = boost::multiprecision;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
  }
  return r;
}

struct Factor {
  std::uint64_t p;
  unsigned e;
  std::uint64_t pe;
};

std::vector<Factor> factorize(std::uint64_t n) {
  std::vector<Factor> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    Factor f{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++f.e;
      f.pe *= p;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::uint64_t primitive_root_mod_prime_power(std::uint64_t p) {
  auto const factors = factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto const& f : factors) ok = ok && powmod(g, (p - 1) / f.p, p) != 1;
    // A root mod p lifts to every p^k unless g^(p-1) = 1 mod p^2.
    if (ok && powmod(g, p - 1, p * p) != 1) return g;
  }
}

std::int64_t mod(std::int64_t n, std::uint64_t q) {
  auto const r = n % static_cast<std::int64_t>(q);
  return r < 0 ? r + static_cast<std::int64_t>(q) : r;
}

// Local exponents e(n) for n mod p^k, as numerators over phi(p^k); -1 off the units.
std::vector<std::int64_t> local_exponents(Factor const& f, std::uint64_t index) {
  std::uint64_t const pe = f.pe;
  std::uint64_t const phi = pe / f.p * (f.p - 1);
  std::vector<std::int64_t> out(pe, -1);
  std::uint64_t const m = index % pe;
  if (f.p != 2) {
    std::uint64_t const g = primitive_root_mod_prime_power(f.p);
    std::vector<std::int64_t> dlog(pe, -1);
    std::uint64_t pw = 1;
    for (std::uint64_t k = 0; k < phi; ++k, pw = mulmod(pw, g, pe)) dlog[pw] = static_cast<std::int64_t>(k);
    std::uint64_t const a = static_cast<std::uint64_t>(dlog[m]);
    for (std::uint64_t n = 0; n < pe; ++n) {
      if (dlog[n] >= 0) out[n] = static_cast<std::int64_t>(mulmod(a, static_cast<std::uint64_t>(dlog[n]), phi));
    }
    return out;
  }
  if (f.e == 1) {
    out[1] = 0;
    return out;
  }
  if (f.e == 2) {
    out[1] = 0;
    out[3] = (m == 3) ? 1 : 0;
    return out;
  }
  // n = eps * 5^b mod 2^k.
  std::uint64_t const quarter = pe / 4;
  std::vector<std::int64_t> dlog5(pe, -1);
  std::uint64_t pw = 1;
  for (std::uint64_t k = 0; k < quarter; ++k, pw = pw * 5 % pe) dlog5[pw] = static_cast<std::int64_t>(k);
  auto split = [&](std::uint64_t n) {
    bool const minus = n % 4 == 3;
    std::uint64_t const base = minus ? pe - n : n;
    return std::pair{minus, static_cast<std::uint64_t>(dlog5[base])};
  };
  auto const [m_minus, a] = split(m);
  for (std::uint64_t n = 1; n < pe; n += 2) {
    auto const [n_minus, b] = split(n);
    std::uint64_t e = 2 * a * b % phi;
    if (m_minus && n_minus) e = (e + phi / 2) % phi;
    out[n] = static_cast<std::int64_t>(e);
  }
  return out;
}

}  // namespace

bool is_squarefree(std::uint64_t d) {
  if (d == 0) return false;
  for (auto const& f : factorize(d)) {
    if (f.e > 1) return false;
  }
  return true;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    auto const r = mod(a, 8);
    if ((twos & 1) && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (a / n), n odd positive.
  std::int64_t top = mod(a, static_cast<std::uint64_t>(n));
  std::int64_t bottom = n;
  while (top != 0) {
    while (top % 2 == 0) {
      top /= 2;
      auto const r = bottom % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(top, bottom);
    if (top % 4 == 3 && bottom % 4 == 3) result = -result;
    top %= bottom;
  }
  return bottom == 1 ? result : 0;
}

std::uint64_t absolute_discriminant(std::uint64_t d) {
  if (!is_squarefree(d)) throw std::domain_error("d = " + std::to_string(d) + " is not squarefree");
  return d % 4 == 3 ? d : 4 * d;
}

KroneckerCharacter::KroneckerCharacter(std::uint64_t d) : d_(d) {
  auto const big_d = absolute_discriminant(d);
  table_.resize(big_d);
  for (std::uint64_t a = 0; a < big_d; ++a) {
    table_[a] = kronecker_symbol(-static_cast<std::int64_t>(big_d), static_cast<std::int64_t>(a));
  }
}

int KroneckerCharacter::operator()(std::int64_t n) const { return table_[static_cast<std::size_t>(mod(n, modulus()))]; }

KroneckerCharacter kronecker_chi(std::uint64_t d) { return KroneckerCharacter(d); }

std::vector<ReducedForm> reduced_forms(std::uint64_t D) {
  std::vector<ReducedForm> out;
  auto const disc = static_cast<std::int64_t>(D);
  for (std::int64_t a = 1; 3 * a * a <= disc; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b * b + disc) % (4 * a) != 0) continue;
      std::int64_t const c = (b * b + disc) / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

ImaginaryQuadraticData class_data(std::uint64_t d) {
  KroneckerCharacter chi(d);
  std::uint64_t const big_d = chi.modulus();
  auto forms = reduced_forms(big_d);
  unsigned const w = big_d == 3 ? 6 : big_d == 4 ? 4 : 2;
  HReal const A = bmp::sqrt(HReal(big_d) / mp::pi());
  auto const h = static_cast<unsigned>(forms.size());
  return {d, big_d, h, w, std::move(chi), A, std::move(forms)};
}

DirichletCharacter DirichletCharacter::conrey(std::uint64_t q, std::uint64_t index) {
  if (q == 0) throw std::domain_error("Dirichlet character: modulus must be positive");
  if (q > (std::uint64_t{1} << 24)) throw std::length_error("Dirichlet character: modulus too large to tabulate");
  index %= q;
  if (q == 1) index = 1;
  if (std::gcd(index, q) != 1) {
    throw std::domain_error("Dirichlet character: Conrey index must be coprime to the modulus");
  }
  DirichletCharacter chi;
  chi.q_ = q;
  chi.index_ = index;
  auto const factors = factorize(q);
  std::vector<std::vector<std::int64_t>> locals;
  std::vector<std::uint64_t> phis;
  for (auto const& f : factors) {
    locals.push_back(local_exponents(f, index));
    phis.push_back(f.pe / f.p * (f.p - 1));
    chi.n_ = std::lcm(chi.n_, phis.back());
  }
  chi.exps_.assign(q, -1);
  for (std::uint64_t n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto const local = locals[i][n % factors[i].pe];
      e = (e + static_cast<std::uint64_t>(local) * (chi.n_ / phis[i])) % chi.n_;
    }
    chi.exps_[n] = static_cast<std::int64_t>(e);
  }
  if (q == 1) chi.exps_[0] = 0;
  return chi;
}

DirichletCharacter DirichletCharacter::from_kronecker(KroneckerCharacter const& k) {
  DirichletCharacter chi;
  chi.q_ = k.modulus();
  chi.n_ = 2;
  chi.exps_.resize(chi.q_);
  for (std::uint64_t a = 0; a < chi.q_; ++a) {
    int const v = k.table()[a];
    chi.exps_[a] = v == 0 ? -1 : v == 1 ? 0 : 1;
  }
  // Recover the Conrey index: the unique m whose character matches the table.
  for (std::uint64_t m = 1; m < chi.q_; ++m) {
    if (std::gcd(m, chi.q_) != 1) continue;
    auto const candidate = conrey(chi.q_, m);
    if (!candidate.is_real()) continue;
    bool same = true;
    for (std::uint64_t a = 0; a < chi.q_ && same; ++a) {
      auto const e = candidate.exponent(static_cast<std::int64_t>(a));
      same = e ? (chi.exps_[a] >= 0 && 2 * *e / candidate.n_ == static_cast<std::uint64_t>(chi.exps_[a]))
               : chi.exps_[a] < 0;
    }
    if (same) {
      chi.index_ = m;
      break;
    }
  }
  return chi;
}

std::optional<std::uint64_t> DirichletCharacter::exponent(std::int64_t n) const {
  auto const e = exps_[static_cast<std::size_t>(mod(n, q_))];
  if (e < 0) return std::nullopt;
  return static_cast<std::uint64_t>(e);
}

HComplex DirichletCharacter::value(std::int64_t n) const {
  auto const e = exponent(n);
  if (!e) return HComplex();
  return mp::root_of_unity(static_cast<long>(*e), static_cast<long>(n_));
}

bool DirichletCharacter::is_real() const {
  for (auto const e : exps_) {
    if (e > 0 && 2 * static_cast<std::uint64_t>(e) != n_) return false;
  }
  return true;
}

int DirichletCharacter::parity() const {
  auto const e = exponent(-1);
  return (e && *e != 0) ? 1 : 0;
}

std::uint64_t DirichletCharacter::conductor() const {
  for (std::uint64_t f = 1; f < q_; ++f) {
    if (q_ % f) continue;
    bool trivial = true;
    for (std::uint64_t n = 1; n < q_ && trivial; n += f) {
      if (std::gcd(n, q_) != 1) continue;
      trivial = exps_[n] == 0;
    }
    if (trivial) return f;
  }
  return q_;
}

HComplex DirichletCharacter::gauss_sum() const {
  HComplex tau;
  for (std::uint64_t a = 1; a <= q_; ++a) {
    auto const e = exponent(static_cast<std::int64_t>(a));
    if (!e) continue;
    // chi(a) e(a/q) = exp(2 pi i (e/N + a/q)), combined over the common base N q.
    auto const num = static_cast<long>((*e * q_ + a % q_ * n_) % (n_ * q_));
    tau += mp::root_of_unity(num, static_cast<long>(n_ * q_));
  }
  return tau;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::uint64_t inv = 1;
  while (mulmod(inv, index_, q_) != 1 % q_) ++inv;
  return conrey(q_, inv);
}

HComplex DirichletCharacter::root_number() const {
  if (!is_primitive()) throw std::domain_error("root_number: character " + label() + " is not primitive");
  HComplex const i_a = parity() ? HComplex(HReal(0), HReal(1)) : HComplex(HReal(1));
  return gauss_sum() / (i_a * HComplex(bmp::sqrt(HReal(q_))));
}

std::string DirichletCharacter::label() const { return std::to_string(q_) + "." + std::to_string(index_); }

HComplex dirichlet_l(HReal const& s, DirichletCharacter const& chi) {
  std::uint64_t const q = chi.modulus();
  if (s == 1) {
    if (chi.index() == 1) throw std::domain_error("dirichlet_l: pole of the principal character at s = 1");
    // L(1, chi) = -(1/q) sum_a chi(a) psi(a/q)
    HComplex acc;
    for (std::uint64_t a = 1; a <= q; ++a) {
      auto const c = chi.value(static_cast<std::int64_t>(a));
      if (c.re == 0 && c.im == 0) continue;
      acc += c * HComplex(mp::digamma(HReal(a) / q));
    }
    return -acc / HComplex(HReal(q));
  }
  HComplex acc;
  for (std::uint64_t a = 1; a <= q; ++a) {
    auto const c = chi.value(static_cast<std::int64_t>(a));
    if (c.re == 0 && c.im == 0) continue;
    HReal const z = mp::hurwitz_zeta(s, HReal(a) / q).value;
    acc += c * HComplex(z);
  }
  return acc * HComplex(bmp::exp(-s * bmp::log(HReal(q))));
}

HComplex dirichlet_l_prime(HReal const& s, DirichletCharacter const& chi) {
  if (!(s > 0)) throw std::domain_error("dirichlet_l_prime: s > 0 required");
  HReal h = mp::ldexp(1, -20);
  while (h * 2 >= s) h /= 16;
  HReal const tol(1e-6);
  auto const re = mp::central_derivative([&](HReal const& t) { return dirichlet_l(t, chi).re; }, s, h, tol);
  if (chi.is_real()) return {re.value, HReal(0)};
  auto const im = mp::central_derivative([&](HReal const& t) { return dirichlet_l(t, chi).im; }, s, h, tol);
  return {re.value, im.value};
}

HComplex dirichlet_log_derivative(HReal const& s, DirichletCharacter const& chi) {
  if (s > 0) return dirichlet_l_prime(s, chi) / dirichlet_l(s, chi);
  if (!chi.is_primitive()) {
    throw std::domain_error("dirichlet_log_derivative: s <= 0 needs a primitive character, got " + chi.label());
  }
  int const a = chi.parity();
  HReal const shifted = (s + a) / 2;
  if (bmp::floor(shifted) == shifted) throw std::domain_error("dirichlet_log_derivative: trivial zero");
  HReal const q(chi.modulus());
  HReal const real_part = -bmp::log(q / mp::pi()) - mp::digamma(shifted) / 2 - mp::digamma((1 - s + a) / 2) / 2;
  return HComplex(real_part) - dirichlet_log_derivative(1 - s, chi.conjugate());
}

}  // namespace zx::arith
