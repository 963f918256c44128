#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddisc/monomial.hpp"

namespace ddisc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ordered list of distinct variable names plus the order used to sort terms.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring>(std::move(names), order);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t var) const { return names_.at(var); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const MonomialOrder& order() const { return order_; }

  bool same_as(const Ring& other) const {
    return this == &other || (names_ == other.names_ && order_ == other.order_);
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in descending ring order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Rational& constant);

  static Polynomial variable(RingPtr ring, std::size_t var, std::uint32_t power = 1);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  /// nullopt for the zero polynomial.
  std::optional<int> total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  std::vector<std::size_t> variables() const;
  bool is_homogeneous() const;

  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coefficient; }
  Rational coefficient_of(const Monomial& m) const;
  Rational constant_term() const { return coefficient_of(Monomial{}); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial multiply_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;

  /// `point` holds one value per ring variable.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Variable name -> image polynomial in the target ring.
using Substitution = std::map<std::string, Polynomial, std::less<>>;

/// Image of f under the ring homomorphism defined by `assignments`.
Polynomial substitute(const Polynomial& f, const Substitution& assignments, const RingPtr& target);

/// Same homomorphism given positionally: images[i] is the image of variable i
/// (nullopt entries are only legal for variables f does not involve).
Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images,
                      const RingPtr& target);

/// Re-expresses f in `target`, matching variables by name.
Polynomial map_to_ring(const Polynomial& f, const RingPtr& target);

/// Coprime integer coefficients, positive leading coefficient under `order`.
Polynomial normalize_integer_primitive(const Polynomial& f, const MonomialOrder& order);
/// Normalization under the canonical (GrevLex) order used for printed output.
Polynomial normalize_integer_primitive(const Polynomial& f);

/// Quotient f/g when g divides f exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Greatest common divisor, normalized integer-primitive (zero only if both are zero).
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Product of the distinct irreducible factors of f (up to a constant):
/// f / gcd(f, df/dv_1, ..., df/dv_k).
Polynomial squarefree_multivariate(const Polynomial& f);

/// Coefficients of f viewed as a polynomial in `var`, keyed by exponent.
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& f, std::size_t var);

}  // namespace ddisc
