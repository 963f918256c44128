#include <doctest.h>

#include "ddisc/discriminant.hpp"
#include "ddisc/text.hpp"
#include "support.hpp"

using namespace ddisc;
using namespace ddisc::testing;

namespace {

ParametricSystem toy() { return load_system(model_path("example2_toy.sys")); }
ParametricSystem example1() { return load_system(model_path("example1_linear.model")); }

DiscriminantOutput interpolate(const ParametricSystem& sys, Strategy strategy, std::size_t pivot = 0,
                               unsigned jobs = 1, std::uint64_t seed = 42) {
  DiscriminantOptions options;
  options.strategy = strategy;
  options.pivot = pivot;
  options.jobs = jobs;
  options.seed = seed;
  return dxj_interpolate(sys, options);
}

}  // namespace

TEST_CASE("toy discriminant by every method") {
  auto sys = toy();
  CHECK(to_string(dxj_elimination(sys).polynomial) == "u1^2-4*u0*u2");
  for (auto strategy : {Strategy::S1, Strategy::S2})
    for (std::size_t pivot : {0, 1, 2}) {
      auto out = interpolate(sys, strategy, pivot);
      CHECK(to_string(out.polynomial) == "u1^2-4*u0*u2");
      CHECK(out.degrees.total == 2);
    }
}

TEST_CASE("toy degree profile") {
  auto d = degree_probe(toy(), 42);
  CHECK(d.total == 2);
  CHECK(d.per_variable == std::vector<int>{1, 2, 1});
}

TEST_CASE("toy line restrictions") {
  auto sys = toy();
  const Rational a[] = {Rational(1), Rational(3), Rational(5)};
  const Rational b[] = {Rational(11), Rational(2), Rational(6)};
  auto line = restrict_to_line(sys, a, b);
  CHECK(line == UnivariatePolynomial({Rational(260, 11), Rational(232, 11), Rational(1)}));

  const Rational b1[] = {Rational(13), Rational(4)};
  CHECK(intersect_sample(sys, b1, 1, 2) == UnivariatePolynomial({Rational(-208), Rational(0), Rational(1)}));
  const Rational b2[] = {Rational(7), Rational(3)};
  CHECK(intersect_sample(sys, b2, 1, 2) == UnivariatePolynomial({Rational(-84), Rational(0), Rational(1)}));
  const Rational zero_b[] = {Rational(0), Rational(5)};
  CHECK_THROWS(intersect_sample(sys, zero_b, 1, 2));
}

TEST_CASE("shear choice") {
  auto pivot_u1 = linear_operator(toy(), 1, 42);
  CHECK(pivot_u1.shear.is_identity());
  auto pivot_u0 = linear_operator(toy(), 0, 42);
  CHECK(pivot_u0.degrees.per_variable[0] == 2);

  auto ex1 = linear_operator(example1(), 0, 42);
  CHECK(ex1.shear.is_identity());
  CHECK(ex1.degrees.total == 4);
  CHECK(ex1.degrees.per_variable == std::vector<int>{4, 4, 4, 4});

  auto rig = load_system(model_path("monomial_u1u2.sys"));
  CHECK(to_string(dxj_elimination(rig).polynomial) == "u1*u2");
  auto sheared = linear_operator(rig, 0, 42);
  CHECK_FALSE(sheared.shear.is_identity());
  CHECK(sheared.degrees.per_variable[0] == 2);
  CHECK(to_string(interpolate(rig, Strategy::S1).polynomial) == "u1*u2");
  CHECK(to_string(interpolate(rig, Strategy::S2).polynomial) == "u1*u2");
}

TEST_CASE("constant discriminant") {
  auto rig = load_system(model_path("constant_one.sys"));
  auto elim = dxj_elimination(rig);
  CHECK(to_string(elim.polynomial) == "1");
  auto d = degree_probe(rig, 42);
  CHECK(d.total == 0);
  auto interp = interpolate(rig, Strategy::S1);
  CHECK(to_string(interp.polynomial) == "1");
  CHECK_FALSE(interp.warnings.empty());
}

TEST_CASE("Example 1 discriminant by every method") {
  auto sys = example1();
  auto pring = parameter_ring(sys);
  auto golden = parse_polynomial(kExample1Quartic, pring);
  auto elim = dxj_elimination(sys);
  CHECK(elim.polynomial == golden);
  CHECK(to_string(elim.polynomial) == to_string(golden));
  auto s1 = interpolate(sys, Strategy::S1);
  auto s2 = interpolate(sys, Strategy::S2);
  CHECK(s1.polynomial == golden);
  CHECK(s2.polynomial == golden);
  auto d = degree_probe(sys, 7);
  CHECK(d.total == 4);
  CHECK(d.per_variable == std::vector<int>{4, 4, 4, 4});
}

TEST_CASE("discriminants are homogeneous") {
  CHECK(homogeneous_at_random_scalings(dxj_elimination(toy()).polynomial, 5, 1));
  CHECK(homogeneous_at_random_scalings(dxj_elimination(example1()).polynomial, 5, 2));
}

TEST_CASE("fresh lines agree with the discriminant") {
  for (const char* file : {"example2_toy.sys", "example1_linear.model", "monomial_u1u2.sys"}) {
    auto sys = load_system(model_path(file));
    auto dxj = dxj_elimination(sys).polynomial;
    for (std::uint64_t seed : {101, 202, 303}) CHECK(fresh_line_consistent(sys, dxj, seed));
  }
  auto sys = toy();
  auto wrong = parse_polynomial("u1^2-3*u0*u2", parameter_ring(sys));
  CHECK_FALSE(fresh_line_consistent(sys, wrong, 101));
}

TEST_CASE("interpolation does not depend on the thread count") {
  auto sys = example1();
  auto one = interpolate(sys, Strategy::S2, 0, 1, 9);
  auto many = interpolate(sys, Strategy::S2, 0, 4, 9);
  CHECK(one.polynomial == many.polynomial);
  CHECK(one.samples == many.samples);
  CHECK(one.retries == many.retries);
}

TEST_CASE("two-parameter slice of the censoring model") {
  auto sys = load_system(model_path("example3_censoring.model"));
  auto slice = freeze_parameters(sys, {{2, Rational(174)}, {3, Rational(211)}});
  CHECK(slice.parameter_count == 2);
  CHECK_FALSE(slice.homogeneous);
  auto s1 = interpolate(slice, Strategy::S1, 0, 1, 5);
  auto s2 = interpolate(slice, Strategy::S2, 0, 1, 5);
  CHECK(s1.polynomial == s2.polynomial);
  CHECK(fresh_line_consistent(slice, s1.polynomial, 77));
}

TEST_CASE("exact linear solve") {
  std::vector<std::vector<Rational>> m{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  auto x = solve_linear(m, {Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  std::vector<std::vector<Rational>> singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_FALSE(solve_linear(singular, {Rational(1), Rational(1)}).has_value());
}

TEST_CASE("parallel_for reports the lowest failing index") {
  std::vector<int> seen(50, 0);
  parallel_for(50, 4, [&](std::size_t i) { seen[i] = 1; });
  CHECK(std::count(seen.begin(), seen.end(), 1) == 50);
  try {
    parallel_for(50, 4, [](std::size_t i) {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "7");
  }
}

TEST_CASE("DX_p through the parameter ring") {
  auto sys = example1();
  CHECK(to_string(map_to_ring(dx_p(sys), parameter_ring(sys))) == "u0*u1*u2*u3");
}
