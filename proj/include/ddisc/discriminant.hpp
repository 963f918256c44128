#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ddisc/likelihood.hpp"
#include "ddisc/univariate.hpp"

namespace ddisc {

/// Total degree of DX_J and its degree in each parameter.
struct DegreeProfile {
  int total = 0;
  std::vector<int> per_variable;
};

/// u_i <- a_i * u_pivot + u_i for every parameter i != pivot.
struct ShearTransform {
  std::size_t pivot = 0;
  std::vector<Integer> coefficients;  ///< one per parameter, zero at the pivot

  bool is_identity() const;
};

enum class Method { Elimination, InterpolationS1, InterpolationS2 };
enum class Strategy { S1 = 1, S2 = 2 };

std::string method_name(Method m);

struct DiscriminantOptions {
  std::uint64_t seed = 42;
  std::size_t pivot = 0;  ///< parameter index of the distinguished variable
  Strategy strategy = Strategy::S1;
  unsigned jobs = 1;
  GroebnerLimits limits;
};

struct DiscriminantOutput {
  Polynomial polynomial;  ///< in parameter_ring(sys), integer-primitive
  Method method = Method::Elimination;
  DegreeProfile degrees;
  ShearTransform shear;
  std::uint64_t seed = 0;
  std::size_t retries = 0;
  std::size_t samples = 0;
  std::vector<std::string> warnings;
};

/// Ring of the parameters alone, in system order.
RingPtr parameter_ring(const ParametricSystem& sys);

/// Monic squarefree generator of <equations, J> restricted to the line
/// u_k = a_k * t + b_k (returned in t). Throws ZeroIdeal when the line lies
/// inside the projection's dominant part.
UnivariatePolynomial restrict_to_line(const ParametricSystem& sys, std::span<const Rational> a,
                                      std::span<const Rational> b, const GroebnerLimits& limits = {});

/// DX_J by eliminating all unknowns. A zero elimination ideal gives the constant 1
/// with a warning; a non-principal ideal contributes the gcd of its generators.
DiscriminantOutput dxj_elimination(const ParametricSystem& sys, const GroebnerLimits& limits = {});

/// Degrees from random specializations and a random line.
DegreeProfile degree_probe(const ParametricSystem& sys, std::uint64_t seed, const GroebnerLimits& limits = {},
                           std::size_t* retries = nullptr);

/// The system after substituting u_i -> a_i * u_pivot + u_i into every equation and J.
ParametricSystem apply_shear(const ParametricSystem& sys, const ShearTransform& shear);

struct LinearOperatorResult {
  ShearTransform shear;
  ParametricSystem system;
  DegreeProfile initial_degrees;  ///< of the input system
  DegreeProfile degrees;          ///< of the sheared system
  std::size_t retries = 0;
};

/// Finds a shear making the pivot degree equal the total degree.
LinearOperatorResult linear_operator(const ParametricSystem& sys, std::size_t pivot, std::uint64_t seed,
                                     const GroebnerLimits& limits = {});

/// DX_J(u_keep, b) up to radical: monic squarefree in u_keep, returned as a
/// univariate polynomial. `b` lists values for every parameter except `keep`.
UnivariatePolynomial intersect_sample(const ParametricSystem& sys, std::span<const Rational> b, std::size_t keep,
                                      int expected_degree, const GroebnerLimits& limits = {});

DiscriminantOutput dxj_interpolate(const ParametricSystem& sys, const DiscriminantOptions& options);

/// Compares the squarefree monic restriction of `dxj` to a random line with the
/// elimination along that line.
bool fresh_line_consistent(const ParametricSystem& sys, const Polynomial& dxj, std::uint64_t seed,
                           const GroebnerLimits& limits = {});

/// Fixes some parameters to values; the remaining ones keep their order.
/// The slice is not assumed homogeneous.
ParametricSystem freeze_parameters(const ParametricSystem& sys, const std::map<std::size_t, Rational>& values);

/// Runs fn(0..count-1) on up to `jobs` threads; the exception of the lowest failing index is rethrown.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Solves M x = y exactly; nullopt if M is singular. M is square.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> y);

}  // namespace ddisc
