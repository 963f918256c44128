#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "ddisc/polynomial.hpp"

namespace ddisc {

/// Budget for a single Groebner basis computation.
struct GroebnerLimits {
  std::size_t max_pairs = 200000;
  std::chrono::milliseconds max_time = std::chrono::seconds(600);
  /// Absolute deadline shared by a whole command; the earlier bound wins.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Reduced Groebner basis; elements have monic leading coefficients and are
/// sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit() const;

  /// Remainder of f under full reduction by the basis (unique for a reduced basis).
  Polynomial normal_form(const Polynomial& f) const;

  /// Monomials in `vars` not divisible by any leading monomial. Requires a
  /// zero-dimensional ideal in those variables, otherwise NotZeroDimensional.
  std::vector<Monomial> standard_monomials(std::span<const std::size_t> vars) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<Term>> sorted_;  // element terms in descending basis order
};

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerLimits& limits = {});

struct EliminationResult {
  /// Generators of the elimination ideal (in the input ring, free of the dropped variables).
  std::vector<Polynomial> generators;
  bool is_principal = false;
  bool is_zero_ideal = false;
};

/// <generators> intersected with the subring of the variables not in `drop_vars`.
EliminationResult eliminate(std::span<const Polynomial> generators, std::span<const std::size_t> drop_vars,
                            const GroebnerLimits& limits = {});

/// Number of standard monomials in `unknowns` (0 for the unit ideal).
std::size_t quotient_dimension(const GroebnerBasis& basis, std::span<const std::size_t> unknowns);

/// Monic generator of a principal elimination ideal in one retained variable.
Polynomial univariate_generator(const EliminationResult& result);

/// Monic minimal polynomial of multiplication by f on the quotient ring
/// (requires a zero-dimensional ideal in `vars`), returned in variable `var`
/// of `target`. The constant 1 for the unit ideal.
Polynomial minimal_polynomial(const GroebnerBasis& basis, const Polynomial& f, std::span<const std::size_t> vars,
                              const RingPtr& target, std::size_t var);

/// Monic generator of <generators> intersected with Q[var]. Uses a GrevLex basis
/// and the minimal polynomial of var when the ideal is zero-dimensional, block
/// elimination otherwise. Throws ZeroIdeal when the intersection is zero.
Polynomial eliminate_to_variable(std::span<const Polynomial> generators, std::size_t var,
                                 const GroebnerLimits& limits = {});

/// Monic squarefree part of a univariate polynomial (the constant 1 for constants).
Polynomial squarefree_part(const Polynomial& f);

/// Reduces every S-polynomial of basis pairs and every listed generator; true iff all vanish.
bool verify_groebner(const GroebnerBasis& basis, std::span<const Polynomial> generators);

}  // namespace ddisc
