#pragma once

#include <utility>
#include <vector>

#include "ddisc/polynomial.hpp"

namespace ddisc {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  /// Throws std::invalid_argument if f involves a variable other than `var`.
  static UnivariatePolynomial from_polynomial(const Polynomial& f, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  const Rational& leading_coefficient() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  UnivariatePolynomial operator-() const;
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Euclidean division; divisor must be nonzero.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Monic f / gcd(f, f'); the constant 1 for nonzero constants.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f);

}  // namespace ddisc
