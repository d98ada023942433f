// characters.hpp
//
// Quadratic (Kronecker) characters, imaginary-quadratic class data, and
// general Dirichlet characters in Conrey labelling.

#pragma once

#include "zx/mp/hreal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zx::arith {

using mp::HComplex;
using mp::HReal;

bool is_squarefree(std::uint64_t d);

// Kronecker symbol (a/n) for any integers a, n.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// |disc Q(sqrt(-d))| for squarefree d >= 1.
std::uint64_t absolute_discriminant(std::uint64_t d);

// chi_{-d}(n) = (-D/n): a real primitive character modulo D.
class KroneckerCharacter {
 public:
  explicit KroneckerCharacter(std::uint64_t d);
  std::uint64_t d() const { return d_; }
  std::uint64_t modulus() const { return table_.size(); }
  std::vector<int> const& table() const { return table_; }
  int operator()(std::int64_t n) const;

 private:
  std::uint64_t d_;
  std::vector<int> table_;  // table_[a] = chi(a), 0 <= a < D
};

// Throws std::domain_error unless d is a squarefree positive integer.
KroneckerCharacter kronecker_chi(std::uint64_t d);

struct ReducedForm {
  std::int64_t a, b, c;
};

struct ImaginaryQuadraticData {
  std::uint64_t d;
  std::uint64_t D;
  unsigned h;
  unsigned w;
  KroneckerCharacter chi;
  HReal A;  // sqrt(D / pi)
  std::vector<ReducedForm> forms;
};

// Reduced forms b^2 - 4ac = -D with |b| <= a <= c, and b >= 0 if |b| = a or a = c.
std::vector<ReducedForm> reduced_forms(std::uint64_t D);

ImaginaryQuadraticData class_data(std::uint64_t d);

// Character chi_q(m, .) in Conrey labelling. Values are roots of unity
// exp(2 pi i e / N) with N = lcm of phi(p^k) over p^k || q.
class DirichletCharacter {
 public:
  static DirichletCharacter conrey(std::uint64_t q, std::uint64_t index);
  static DirichletCharacter from_kronecker(KroneckerCharacter const& chi);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t index() const { return index_; }
  std::uint64_t order_base() const { return n_; }
  // e with chi(n) = exp(2 pi i e / N); empty when gcd(n, q) > 1.
  std::optional<std::uint64_t> exponent(std::int64_t n) const;
  HComplex value(std::int64_t n) const;
  bool is_real() const;
  int parity() const;  // 0 when chi(-1) = 1, 1 otherwise
  std::uint64_t conductor() const;
  bool is_primitive() const { return conductor() == q_; }
  HComplex gauss_sum() const;
  // tau(chi) / (i^a sqrt(q)); requires a primitive character.
  HComplex root_number() const;
  DirichletCharacter conjugate() const;
  std::string label() const;

 private:
  std::uint64_t q_ = 1;
  std::uint64_t index_ = 1;
  std::uint64_t n_ = 1;
  std::vector<std::int64_t> exps_;  // -1 marks gcd(n, q) > 1
};

// L(s, chi) = q^(-s) sum_a chi(a) zeta(s, a/q) for real s > 0, s != 1.
// s = 1 is allowed for non-principal chi (digamma form).
HComplex dirichlet_l(HReal const& s, DirichletCharacter const& chi);

// d/ds L(s, chi) for real s > 0, by central differences.
HComplex dirichlet_l_prime(HReal const& s, DirichletCharacter const& chi);

// (L'/L)(s, chi) for real s. Arguments s <= 0 use the functional equation
// and need a primitive character; trivial zeros throw std::domain_error.
HComplex dirichlet_log_derivative(HReal const& s, DirichletCharacter const& chi);

}  // namespace zx::arith
