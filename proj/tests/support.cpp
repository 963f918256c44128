#include "support.hpp"

#include <algorithm>
#include <stdexcept>

#include "ddisc/realclass.hpp"

namespace ddisc::testing {

std::string model_path(const std::string& file) { return std::string(DDISC_MODEL_DIR) + "/" + file; }

const char* const kExample1Quartic =
    "441*u0^4+4998*u0^3*u1+20041*u0^2*u1^2+33320*u0*u1^3+19600*u1^4-756*u0^3*u2"
    "+20034*u0^2*u1*u2+83370*u0*u1^2*u2+79800*u1^3*u2-5346*u0^2*u2^2+55890*u0*u1*u2^2+119025*u1^2*u2^2"
    "+4860*u0*u2^3+76950*u1*u2^3+18225*u2^4-1596*u0^3*u3-11116*u0^2*u1*u3-17808*u0*u1^2*u3+4480*u1^3*u3"
    "+7452*u0^2*u2*u3-7752*u0*u1*u2*u3+49680*u1^2*u2*u3-17172*u0*u2^2*u3+71460*u1*u2^2*u3+27540*u2^3*u3"
    "+2116*u0^2*u3^2+6624*u0*u1*u3^2-4224*u1^2*u3^2-9528*u0*u2*u3^2+15264*u1*u2*u3^2+14724*u2^2*u3^2"
    "-1216*u0*u3^3-512*u1*u3^3+3264*u2*u3^3+256*u3^4";

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int max_terms, int max_degree, bool fractions) {
  Polynomial f(ring);
  int terms = static_cast<int>(rng.uniform(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = static_cast<int>(rng.uniform(0, max_degree));
    for (int k = 0; k < budget; ++k) {
      auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ring->size()) - 1));
      m.set(v, m[v] + 1);
    }
    Rational c(rng.integer(-20, 20), fractions ? rng.integer(1, 9) : Integer(1));
    c.canonicalize();
    if (c == 0) c = 1;
    f += Polynomial::from_terms(ring, {{m, c}});
  }
  return f;
}

namespace {

template <typename T>
std::vector<std::vector<T>> minor_of(const std::vector<std::vector<T>>& m, std::size_t col) {
  std::vector<std::vector<T>> out;
  for (std::size_t r = 1; r < m.size(); ++r) {
    std::vector<T> row;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != col) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

Monomial leading_under(const Polynomial& f, const MonomialOrder& order) {
  Monomial best = f.terms().front().monomial;
  for (const auto& t : f.terms())
    if (order.less(best, t.monomial)) best = t.monomial;
  return best;
}

}  // namespace

Polynomial cofactor_determinant(const std::vector<std::vector<Polynomial>>& m) {
  if (m.size() == 1) return m[0][0];
  Polynomial det(m[0][0].ring());
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[0][c].is_zero()) continue;
    auto term = m[0][c] * cofactor_determinant(minor_of(m, c));
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  if (m.size() == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[0][c] == 0) continue;
    Rational term = m[0][c] * cofactor_determinant(minor_of(m, c));
    det += c % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
  auto fc = coefficients_in(f, var), gc = coefficients_in(g, var);
  std::size_t m = f.degree_in(var), n = g.degree_in(var);
  const auto& ring = f.ring();
  std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size, Polynomial(ring)));
  auto coeff = [&](const std::map<std::uint32_t, Polynomial>& c, std::size_t e) {
    auto it = c.find(static_cast<std::uint32_t>(e));
    return it == c.end() ? Polynomial(ring) : it->second;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = coeff(fc, m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = coeff(gc, n - k);
  return cofactor_determinant(s);
}

GroebnerBasis checked_buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  auto basis = buchberger(gens, order);
  const auto& el = basis.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      Monomial a = leading_under(el[i], order), b = leading_under(el[j], order);
      Monomial l = a.lcm(b);
      Rational ca = el[i].coefficient_of(a), cb = el[j].coefficient_of(b);
      auto s = el[i].multiply_monomial(l / a, 1 / ca) - el[j].multiply_monomial(l / b, 1 / cb);
      if (!basis.normal_form(s).is_zero()) throw std::logic_error("S-polynomial does not reduce to zero");
    }
  }
  for (const auto& g : gens)
    if (!basis.normal_form(g).is_zero()) throw std::logic_error("generator not in the ideal of the basis");
  if (!verify_groebner(basis, gens)) throw std::logic_error("verify_groebner rejected the basis");
  return basis;
}

std::size_t roundtrip_failures(std::size_t count, std::uint64_t seed) {
  auto ring = Ring::make({"p0", "p1", "p2", "p12", "l1", "u0", "u1"});
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, {i}));
    auto f = random_polynomial(rng, ring, 8, 6, i % 2 == 1);
    auto text = to_string(f);
    auto back = parse_polynomial(text, ring);
    if (!(back == f) || to_string(back) != text) ++failures;
  }
  return failures;
}

std::size_t resultant_mismatches(std::size_t count, std::uint64_t seed) {
  auto ring = Ring::make({"x", "y"});
  auto x = Polynomial::variable(ring, 0);
  std::size_t failures = 0;
  std::size_t done = 0;
  for (std::uint64_t i = 0; done < count; ++i) {
    Rng rng(derive_seed(seed, {i}));
    auto coeff_y = [&] {
      Polynomial c(ring);
      for (int e = 0; e <= 2; ++e) c += Polynomial::variable(ring, 1, e) * Rational(rng.integer(-9, 9));
      return c;
    };
    // Leading coefficients in x are constants, so the projection is closed.
    auto f = x.pow(2) + coeff_y() * x + coeff_y();
    auto g = (i % 3 == 0) ? x + coeff_y() : x.pow(2) * Rational(rng.integer(1, 5)) + coeff_y() * x + coeff_y();
    auto res = sylvester_resultant(f, g, 0);
    if (res.is_zero()) continue;
    ++done;
    const std::size_t drop[] = {0};
    std::vector<Polynomial> gens{f, g};
    auto elim = eliminate(gens, drop);
    if (elim.is_zero_ideal || !elim.is_principal) {
      ++failures;
      continue;
    }
    if (!(squarefree_part(elim.generators.front()) == squarefree_part(res))) ++failures;
  }
  return failures;
}

std::size_t sturm_mismatches(std::size_t count, std::uint64_t seed) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, {i}));
    std::vector<Rational> roots;
    int k = static_cast<int>(rng.uniform(1, 7));
    while (static_cast<int>(roots.size()) < k) {
      Rational r(rng.integer(-20, 20), rng.integer(1, 5));
      r.canonicalize();
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    UnivariatePolynomial f({Rational(rng.integer(1, 9)) * (rng.uniform(0, 1) ? 1 : -1)});
    for (const auto& r : roots) f = f * UnivariatePolynomial({-r, Rational(1)});

    // Denominator 13 never matches a root, whose denominators are at most 5.
    auto endpoint = [&] {
      Integer num;
      do num = rng.integer(-300, 300);
      while (num % 13 == 0);
      return Rational(num, 13);
    };
    Rational a = endpoint(), b = endpoint();
    if (b < a) std::swap(a, b);
    auto brute = [&](const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
      return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [&](const Rational& r) {
        return (!lo || r > *lo) && (!hi || r <= *hi);
      }));
    };
    bool ok = sturm_count(f, a, b) == brute(a, b) && sturm_count(f) == roots.size() &&
              sturm_count(f, a, std::nullopt) == brute(a, std::nullopt) &&
              sturm_count(f, std::nullopt, b) == brute(std::nullopt, b);
    auto intervals = isolate_real_roots(f);
    ok = ok && intervals.size() == roots.size();
    for (const auto& [lo, hi] : intervals)
      ok = ok && std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r > lo && r <= hi; }) == 1;
    if (!ok) ++failures;
  }
  return failures;
}

std::size_t random_basis_failures(std::size_t count, std::uint64_t seed) {
  auto ring = Ring::make({"x", "y", "z"});
  const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)};
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, {i}));
    std::vector<Polynomial> gens;
    int n = static_cast<int>(rng.uniform(1, 3));
    for (int k = 0; k < n; ++k) gens.push_back(random_polynomial(rng, ring, 4, 2, false));
    try {
      checked_buchberger(gens, orders[i % 3]);
    } catch (const std::logic_error&) {
      ++failures;
    }
  }
  return failures;
}

bool homogeneous_at_random_scalings(const Polynomial& f, std::size_t count, std::uint64_t seed) {
  if (!f.is_homogeneous()) return false;
  int d = f.total_degree().value_or(0);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, {i}));
    std::vector<Rational> u, cu;
    Rational c(rng.integer(1, 40), rng.integer(1, 40));
    c.canonicalize();
    for (std::size_t k = 0; k < f.ring()->size(); ++k) {
      u.emplace_back(rng.integer(1, 50));
      cu.push_back(c * u.back());
    }
    Rational cd = 1;
    for (int e = 0; e < d; ++e) cd *= c;
    if (f.evaluate(cu) != cd * f.evaluate(u)) return false;
  }
  return true;
}

}  // namespace ddisc::testing
