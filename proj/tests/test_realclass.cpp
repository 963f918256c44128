#include <doctest.h>

#include "ddisc/realclass.hpp"
#include "ddisc/text.hpp"
#include "support.hpp"

using namespace ddisc;
using namespace ddisc::testing;

namespace {

UnivariatePolynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int k : coeffs) c.emplace_back(k);
  return UnivariatePolynomial(std::move(c));
}

std::vector<Rational> data(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("Sturm counts") {
  CHECK(sturm_count(poly({-1, 0, 1})) == 2);
  CHECK(sturm_count(poly({1, 0, 1})) == 0);
  CHECK(sturm_count(poly({7})) == 0);
  CHECK_THROWS_AS(sturm_count(poly({-1, 0, 1}), Rational(1), Rational(3)), EndpointRoot);
}

TEST_CASE("x^3-3x+1 has two positive roots") {
  auto f = poly({1, -3, 0, 1});
  CHECK(sturm_count(f, Rational(0), std::nullopt) == 2);

  // Grid oracle: sign changes on a fine grid up to 3, and f' > 0 beyond 3 so no roots lie further out.
  int changes = 0;
  Rational step(1, 1000);
  Rational prev = f(Rational(0));
  for (Rational x = step; x <= 3; x += step) {
    Rational v = f(x);
    if (sgn(v) != 0 && sgn(v) != sgn(prev)) ++changes;
    if (sgn(v) != 0) prev = v;
  }
  CHECK(changes == 2);
  CHECK(f.derivative()(Rational(3)) > 0);
  CHECK(f(Rational(3)) > 0);
}

TEST_CASE("Sturm against factored polynomials") { CHECK(sturm_mismatches(200, 23) == 0); }

TEST_CASE("sign of a polynomial at an isolated root") {
  auto f = poly({-2, 0, 1});
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 2);
  auto [lo, hi] = roots[1];
  CHECK(sign_at_root(f, lo, hi, poly({-1, 1})) == 1);
  CHECK(sign_at_root(f, lo, hi, UnivariatePolynomial({Rational(-3, 2), Rational(1)})) == -1);
  CHECK(sign_at_root(f, lo, hi, poly({-4, 0, 2})) == 0);
  CHECK(sign_at_root(f, roots[0].first, roots[0].second, poly({0, 1})) == -1);
}

TEST_CASE("Example 1 classification") {
  auto sys = load_system(model_path("example1_linear.model"));
  auto dxj = parse_polynomial(kExample1Quartic, Ring::make({"u0", "u1", "u2", "u3"}));
  auto positive = data({51, 18, 73, 25});
  REQUIRE(dxj.evaluate(positive) > 0);
  auto r = classify_at(sys, positive, dxj, 1);
  CHECK(r.real_count == 3);
  CHECK(r.positive_count == 1);
  CHECK(r.dxj_sign == 1);
  CHECK_FALSE(r.dxp_zero);

  // A negative-sign data vector needs a negative coordinate for this model.
  auto negative = data({1, -2, 3, 1});
  REQUIRE(dxj.evaluate(negative) < 0);
  auto n = classify_at(sys, negative, dxj, 1);
  CHECK(n.dxj_sign == -1);
  CHECK(n.real_count == 1);
  CHECK(n.dxp_zero == false);
  CHECK_THROWS_AS(classify_at(sys, data({1, 2}), dxj, 1), std::invalid_argument);
}

TEST_CASE("real count does not depend on the separating form") {
  auto sys = load_system(model_path("example3_censoring.model"));
  for (std::uint64_t i = 0; i < 4; ++i) {
    Rng rng(derive_seed(61, {i}));
    std::vector<Rational> u;
    for (int k = 0; k < 4; ++k) u.emplace_back(rng.integer(1, 999));
    auto a = classify_at(sys, u, std::nullopt, 1);
    auto b = classify_at(sys, u, std::nullopt, 2);
    auto c = classify_at(sys, u, std::nullopt, 3);
    CHECK(a.real_count == b.real_count);
    CHECK(a.real_count == c.real_count);
    CHECK(a.positive_count == c.positive_count);
    CHECK(a.positive_count <= a.real_count);
    CHECK(a.real_count <= a.solutions);
    CHECK(a.solutions == 3);
  }
}

TEST_CASE("Example 1 census is constant on each sign class") {
  auto sys = load_system(model_path("example1_linear.model"));
  auto dxj = parse_polynomial(kExample1Quartic, Ring::make({"u0", "u1", "u2", "u3"}));
  auto census = component_census(sys, dxj, 50, 42, 2);
  CHECK(census.failures == 0);
  std::size_t total = 0;
  for (const auto& e : census.entries) {
    total += e.multiplicity;
    for (const auto& other : census.entries)
      if (other.dxj_sign == e.dxj_sign) CHECK(other.real_count == e.real_count);
    if (e.dxj_sign > 0) {
      CHECK(e.real_count == 3);
      CHECK(e.positive_count == 1);
    }
  }
  CHECK(total == 50);
  CHECK(component_census(sys, dxj, 0, 42).entries.empty());
}

TEST_CASE("census does not depend on the thread count") {
  auto sys = load_system(model_path("example1_linear.model"));
  auto dxj = parse_polynomial(kExample1Quartic, Ring::make({"u0", "u1", "u2", "u3"}));
  auto a = component_census(sys, dxj, 12, 5, 1);
  auto b = component_census(sys, dxj, 12, 5, 4);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].multiplicity == b.entries[i].multiplicity);
}
