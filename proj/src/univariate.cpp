#include "ddisc/univariate.hpp"

#include <stdexcept>

namespace ddisc {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_polynomial(const Polynomial& f, std::size_t var) {
  std::vector<Rational> c(f.is_zero() ? 0 : f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != t.monomial[var])
      throw std::invalid_argument("polynomial is not univariate in " + f.ring()->name(var));
    c[t.monomial[var]] += t.coefficient;
  }
  return UnivariatePolynomial(std::move(c));
}

Polynomial UnivariatePolynomial::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) terms.push_back({Monomial::variable(var, static_cast<std::uint32_t>(e)), coeffs_[e]});
  return Polynomial::from_terms(ring, std::move(terms));
}

Rational UnivariatePolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> c;
  for (std::size_t e = 1; e < coeffs_.size(); ++e) c.push_back(coeffs_[e] * static_cast<unsigned long>(e));
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  UnivariatePolynomial r = *this;
  Rational lc = leading_coefficient();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a + (-b); }

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePolynomial(std::move(c));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial();
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  std::vector<Rational> quot(degree() >= dd ? static_cast<std::size_t>(degree() - dd + 1) : 0);
  for (int k = degree(); k >= dd; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / divisor.leading_coefficient();
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.degree() == 0) return UnivariatePolynomial({Rational(1)});
  auto g = gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

}  // namespace ddisc
