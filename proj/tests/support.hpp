#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddisc/groebner.hpp"
#include "ddisc/likelihood.hpp"
#include "ddisc/random.hpp"
#include "ddisc/text.hpp"
#include "ddisc/univariate.hpp"

namespace ddisc::testing {

/// Path of a file in the bundled model directory.
std::string model_path(const std::string& file);

/// The Example 1 quartic as printed in the source article, transcribed verbatim.
extern const char* const kExample1Quartic;

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int max_terms, int max_degree, bool fractions);

/// Determinant by Laplace expansion along the first row; only for small matrices.
Polynomial cofactor_determinant(const std::vector<std::vector<Polynomial>>& m);
Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m);

/// Resultant of f and g with respect to `var` from the Sylvester matrix.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var);

/// Buchberger followed by an independent S-polynomial check; throws on failure.
GroebnerBasis checked_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);

// Property runs shared by the unit suites and the acceptance binary. Each
// returns the number of failing instances.
std::size_t roundtrip_failures(std::size_t count, std::uint64_t seed);
std::size_t resultant_mismatches(std::size_t count, std::uint64_t seed);
std::size_t sturm_mismatches(std::size_t count, std::uint64_t seed);
std::size_t random_basis_failures(std::size_t count, std::uint64_t seed);

/// f(c u) == c^deg f(u) at `count` random points and scalings.
bool homogeneous_at_random_scalings(const Polynomial& f, std::size_t count, std::uint64_t seed);

}  // namespace ddisc::testing
