#include "ddisc/realclass.hpp"

#include <algorithm>
#include <unordered_map>

#include "ddisc/random.hpp"
#include "ddisc/text.hpp"

namespace ddisc {

namespace {

int sign(const Rational& q) { return sgn(q); }

// Range of f over [lo, hi] by interval Horner evaluation.
std::pair<Rational, Rational> interval_eval(const UnivariatePolynomial& f, const Rational& lo, const Rational& hi) {
  const auto& c = f.coefficients();
  Rational a = c.back(), b = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    a = std::min({p1, p2, p3, p4}) + c[k];
    b = std::max({p1, p2, p3, p4}) + c[k];
  }
  return {a, b};
}

Rational cauchy_bound(const UnivariatePolynomial& f) {
  Rational m = 0;
  const Rational& lc = f.leading_coefficient();
  for (int k = 0; k < f.degree(); ++k) m = std::max(m, Rational(abs(f.coefficient(k) / lc)));
  return m + 1;
}

}  // namespace

SturmSequence::SturmSequence(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    auto r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int count = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sign(p.leading_coefficient());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t SturmSequence::count(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
  if (a && chain_[0](*a) == 0) throw EndpointRoot("left endpoint " + to_string(*a) + " is a root");
  if (b && chain_[0](*b) == 0) throw EndpointRoot("right endpoint " + to_string(*b) + " is a root");
  int va = a ? variations_at(*a) : variations_at_infinity(false);
  int vb = b ? variations_at(*b) : variations_at_infinity(true);
  return va > vb ? static_cast<std::size_t>(va - vb) : 0;
}

std::size_t sturm_count(const UnivariatePolynomial& f, const std::optional<Rational>& a,
                        const std::optional<Rational>& b) {
  return SturmSequence(f).count(a, b);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UnivariatePolynomial& f) {
  std::vector<std::pair<Rational, Rational>> out;
  if (f.degree() < 1) return out;
  SturmSequence sturm(f);
  Rational bound = cauchy_bound(f);
  struct Piece {
    Rational lo, hi;
    std::size_t roots;
  };
  std::vector<Piece> work{{-bound, bound, sturm.count(-bound, bound)}};
  while (!work.empty()) {
    Piece p = work.back();
    work.pop_back();
    if (p.roots == 0) continue;
    if (p.roots == 1) {
      out.emplace_back(p.lo, p.hi);
      continue;
    }
    Rational width = p.hi - p.lo;
    Rational mid = p.lo + width / 2;
    // Nudge a midpoint that happens to be a root.
    for (Rational step = width / 8; f(mid) == 0; step /= 2) mid = p.lo + width / 2 + step;
    std::size_t left = sturm.count(p.lo, mid);
    work.push_back({mid, p.hi, p.roots - left});
    work.push_back({p.lo, mid, left});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sign_at_root(const UnivariatePolynomial& f, Rational lo, Rational hi, const UnivariatePolynomial& g) {
  if (g.is_zero()) return 0;
  auto h = gcd(f, g);
  if (h.degree() >= 1 && sturm_count(h, lo, hi) > 0) return 0;
  int sign_lo = sign(f(lo));
  while (true) {
    auto [a, b] = interval_eval(g, lo, hi);
    if (a > 0) return 1;
    if (b < 0) return -1;
    Rational mid = (lo + hi) / 2;
    int s = sign(f(mid));
    if (s == 0) return sign(g(mid));
    if (s != sign_lo) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

ClassificationResult classify_at(const ParametricSystem& sys, std::span<const Rational> data,
                                 const std::optional<Polynomial>& dxj, std::uint64_t seed,
                                 const GroebnerLimits& limits) {
  if (data.size() != sys.parameter_count)
    throw std::invalid_argument("expected " + std::to_string(sys.parameter_count) + " data values, got " +
                                std::to_string(data.size()));
  ClassificationResult result;
  result.data.assign(data.begin(), data.end());
  result.dxp_zero = std::any_of(data.begin(), data.end(), [](const Rational& q) { return q == 0; });
  if (dxj) result.dxj_sign = sign(dxj->evaluate(data));

  auto ring = unknown_ring(sys);
  auto eqs = specialize_parameters(sys, data, ring);
  auto basis = buchberger(eqs, MonomialOrder::grevlex(), limits);
  auto unknowns = sys.unknowns();
  auto standard = basis.standard_monomials(unknowns);
  const std::size_t dim = standard.size();
  result.solutions = dim;
  if (dim == 0) return result;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < dim; ++i) index.emplace(standard[i], i);
  auto to_vector = [&](const Polynomial& f) {
    std::vector<Rational> v(dim);
    for (const auto& t : f.terms()) v[index.at(t.monomial)] = t.coefficient;
    return v;
  };

  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    Polynomial w(ring);
    for (auto i : unknowns) w += Polynomial::variable(ring, i) * Rational(rng.integer(1, 99));

    // Columns NF(w^0) .. NF(w^(dim-1)) form a basis exactly when w generates the quotient.
    std::vector<std::vector<Rational>> powers;
    Polynomial power(ring, Rational(1));
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k > 0) power = basis.normal_form(power * w);
      powers.push_back(to_vector(power));
    }
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m[r][c] = powers[c][r];
    auto q_low = solve_linear(m, powers[dim]);
    if (!q_low) continue;

    std::vector<Rational> qc(dim + 1);
    for (std::size_t k = 0; k < dim; ++k) qc[k] = -(*q_low)[k];
    qc[dim] = 1;
    UnivariatePolynomial q(std::move(qc));

    std::vector<UnivariatePolynomial> coords;
    for (std::size_t i = 0; i < sys.probability_count; ++i) {
      auto r = solve_linear(m, to_vector(basis.normal_form(Polynomial::variable(ring, i))));
      coords.emplace_back(std::move(*r));
    }

    auto qs = squarefree_part(q);
    auto roots = isolate_real_roots(qs);
    result.real_count = roots.size();
    for (const auto& [lo, hi] : roots) {
      bool positive = std::all_of(coords.begin(), coords.end(),
                                  [&](const UnivariatePolynomial& r) { return sign_at_root(qs, lo, hi, r) > 0; });
      if (positive) ++result.positive_count;
    }
    result.shape_variable = to_string(w);
    return result;
  }
  throw NotShapePosition("no random linear form separated the solutions after 5 attempts");
}

Census component_census(const ParametricSystem& sys, const Polynomial& dxj, std::size_t trials, std::uint64_t seed,
                        unsigned jobs, const GroebnerLimits& limits) {
  std::vector<std::optional<ClassificationResult>> results(trials);
  parallel_for(trials, jobs, [&](std::size_t i) {
    Rng rng(derive_seed(seed, {i}));
    std::vector<Rational> data;
    for (std::size_t k = 0; k < sys.parameter_count; ++k) data.emplace_back(rng.integer(1, 999));
    try {
      results[i] = classify_at(sys, data, dxj, derive_seed(seed, {i, 1}), limits);
    } catch (const Error&) {
    }
  });
  Census census;
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> counts;
  for (const auto& r : results) {
    if (!r) {
      ++census.failures;
      continue;
    }
    ++counts[{r->dxj_sign.value_or(0), r->real_count, r->positive_count}];
  }
  for (const auto& [key, mult] : counts)
    census.entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
  return census;
}

}  // namespace ddisc
