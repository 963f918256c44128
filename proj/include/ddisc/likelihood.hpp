#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ddisc/groebner.hpp"

namespace ddisc {

/// Projective model V(g_1..g_s) intersected with the probability simplex.
struct StatisticalModel {
  std::string name;
  int n = 0;
  RingPtr ring;  ///< the n+1 probability variables
  std::vector<Polynomial> invariants;
};

/// Model file:
///   name = <text>
///   n = <int>
///   variables = p0, p1, ...     (optional, default p0..pn)
///   invariant: <polynomial>     (one or more)
/// Lines starting with '#' are comments.
StatisticalModel parse_model(std::string_view text, const std::string& source = "<model>");
StatisticalModel load_model(const std::filesystem::path& path);

/// Square polynomial system with parameters. Variables of `ring` are the
/// unknowns followed by the parameters.
struct ParametricSystem {
  std::string name;
  RingPtr ring;
  std::size_t unknown_count = 0;
  std::size_t parameter_count = 0;
  /// The first `probability_count` unknowns must be positive for a solution to count as positive.
  std::size_t probability_count = 0;
  std::vector<Polynomial> equations;
  Polynomial jacobian;
  /// Whether the discriminant is known to be homogeneous in the parameters.
  bool homogeneous = true;

  std::size_t parameter(std::size_t k) const { return unknown_count + k; }
  std::vector<std::size_t> unknowns() const;
  std::vector<std::size_t> parameters() const;
  const std::string& parameter_name(std::size_t k) const { return ring->name(parameter(k)); }
};

/// Lagrange likelihood equations. Unknowns p.., l1..l{s+1}; parameter names
/// replace the leading 'p' of each probability variable with 'u'.
ParametricSystem build_lagrange_system(const StatisticalModel& model);

/// Raw system file (for systems that are not likelihood equations):
///   name = <text>
///   unknowns = p
///   parameters = u0, u1, u2
///   equation: <polynomial>      (as many as unknowns)
///   jacobian: <polynomial>      (optional; computed when absent)
///   homogeneous = false         (optional)
ParametricSystem parse_system(std::string_view text, const std::string& source = "<system>");

/// `.sys` files are raw systems; anything else is read as a model.
ParametricSystem load_system(const std::filesystem::path& path);

/// Fraction-free (Bareiss) determinant with row exchanges on zero pivots.
Polynomial determinant(std::vector<std::vector<Polynomial>> matrix);

/// det [dF_i / dx_j] over the unknowns.
Polynomial jacobian_determinant(const ParametricSystem& sys);

/// Product of all parameters.
Polynomial dx_p(const ParametricSystem& sys);

/// The system at fixed parameter values, in a ring of the unknowns only.
std::vector<Polynomial> specialize_parameters(const ParametricSystem& sys, std::span<const Rational> values,
                                              const RingPtr& unknown_ring);
RingPtr unknown_ring(const ParametricSystem& sys);

struct MLDegreeTrial {
  std::vector<Integer> data;
  std::size_t count = 0;
};

struct MLDegreeResult {
  std::size_t value = 0;
  std::vector<MLDegreeTrial> trials;
  bool agreed = false;
};

/// Solution count at random integer data in [1, 999]; trial i uses seed + i.
MLDegreeResult ml_degree(const ParametricSystem& sys, std::uint64_t seed, std::size_t trials = 2,
                         const GroebnerLimits& limits = {});

}  // namespace ddisc
