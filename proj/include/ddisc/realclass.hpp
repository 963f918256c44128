#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "ddisc/discriminant.hpp"
#include "ddisc/univariate.hpp"

namespace ddisc {

/// Sturm chain p, p', -rem(p, p'), ...
class SturmSequence {
 public:
  explicit SturmSequence(const UnivariatePolynomial& p);

  const std::vector<UnivariatePolynomial>& chain() const { return chain_; }
  int variations_at(const Rational& x) const;
  /// Sign variations at +infinity (positive = true) or -infinity.
  int variations_at_infinity(bool positive) const;

  /// Distinct real roots in (a, b]; nullopt stands for -infinity / +infinity.
  /// Throws EndpointRoot when a finite endpoint is a root.
  std::size_t count(const std::optional<Rational>& a, const std::optional<Rational>& b) const;

 private:
  std::vector<UnivariatePolynomial> chain_;
};

/// Distinct real roots of a squarefree polynomial in (a, b].
std::size_t sturm_count(const UnivariatePolynomial& f, const std::optional<Rational>& a = std::nullopt,
                        const std::optional<Rational>& b = std::nullopt);

/// Half-open isolating intervals (lo, hi] of the real roots, in increasing order.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UnivariatePolynomial& f);

/// Sign (-1, 0, 1) of g at the unique root of squarefree f in (lo, hi].
int sign_at_root(const UnivariatePolynomial& f, Rational lo, Rational hi, const UnivariatePolynomial& g);

struct ClassificationResult {
  std::vector<Rational> data;
  std::size_t real_count = 0;
  std::size_t positive_count = 0;
  std::optional<int> dxj_sign;  ///< -1, 0 or 1 when a discriminant was supplied
  bool dxp_zero = false;
  std::string shape_variable;  ///< the separating linear form
  std::size_t solutions = 0;   ///< complex solutions with multiplicity
};

/// Counts real and positive critical points at `data`.
ClassificationResult classify_at(const ParametricSystem& sys, std::span<const Rational> data,
                                 const std::optional<Polynomial>& dxj, std::uint64_t seed,
                                 const GroebnerLimits& limits = {});

struct CensusEntry {
  int dxj_sign = 0;
  std::size_t real_count = 0;
  std::size_t positive_count = 0;
  std::size_t multiplicity = 0;
};

struct Census {
  std::vector<CensusEntry> entries;  ///< sorted by (sign, real, positive)
  std::size_t failures = 0;
};

/// Classifies `trials` random data vectors in [1, 999]^(n+1) and aggregates the outcomes.
Census component_census(const ParametricSystem& sys, const Polynomial& dxj, std::size_t trials, std::uint64_t seed,
                        unsigned jobs = 1, const GroebnerLimits& limits = {});

}  // namespace ddisc
