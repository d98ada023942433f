#include "zx/explicit/pf.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace zx::expl {

namespace {

std::vector<Rational> split_rationals(std::string const& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(mp::parse_rational(item));
  return out;
}

}  // namespace

RationalFunctionPF partial_fractions(std::vector<Rational> numerator, std::vector<Rational> const& roots) {
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  if (roots.empty()) throw std::domain_error("partial_fractions: at least one root required");
  if (numerator.empty()) throw std::domain_error("partial_fractions: numerator is zero");
  if (numerator.size() > roots.size()) {
    throw std::domain_error("partial_fractions: deg A must be below the number of roots");
  }
  std::set<Rational> const distinct(roots.begin(), roots.end());
  if (distinct.size() != roots.size()) throw std::domain_error("partial_fractions: repeated root");

  RationalFunctionPF pf;
  pf.a_ = std::move(numerator);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Rational a_val = 0;
    for (auto it = pf.a_.rbegin(); it != pf.a_.rend(); ++it) a_val = a_val * roots[i] + *it;
    Rational b_prime = 1;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) b_prime *= roots[i] - roots[j];
    }
    pf.terms_.push_back({roots[i], a_val / b_prime});
  }
  return pf;
}

HComplex RationalFunctionPF::evaluate(HComplex const& t) const {
  HComplex acc;
  for (auto const& term : terms_) acc += HComplex(mp::to_hreal(term.residue)) / (t - HComplex(mp::to_hreal(term.root)));
  return acc;
}

HComplex RationalFunctionPF::evaluate_quotient(HComplex const& t) const {
  HComplex num;
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) num = num * t + HComplex(mp::to_hreal(*it));
  HComplex den(HReal(1));
  for (auto const& term : terms_) den *= t - HComplex(mp::to_hreal(term.root));
  return num / den;
}

std::string RationalFunctionPF::describe() const {
  std::ostringstream out;
  bool first = true;
  for (auto const& term : terms_) {
    if (!first) out << " + ";
    first = false;
    out << mp::to_string(term.residue) << "/(t";
    if (term.root > 0) out << " - " << mp::to_string(term.root);
    if (term.root < 0) out << " + " << mp::to_string(Rational(-term.root));
    out << ")";
  }
  return out.str();
}

RationalFunctionPF parse_pf(std::string const& text) {
  auto const bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("partial fraction spec must look like 'A0,A1,...|root1,root2,...'");
  return partial_fractions(split_rationals(text.substr(0, bar)), split_rationals(text.substr(bar + 1)));
}

}  // namespace zx::expl
