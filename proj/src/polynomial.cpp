#include "ddisc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "ddisc/univariate.hpp"

namespace ddisc {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void sort_and_combine(const MonomialOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coefficient;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) sum += terms[j++].coefficient;
    if (sum != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coefficient = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// a + sign*b for sorted term lists.
std::vector<Term> merge(const MonomialOrder& order, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVariables)
    throw std::invalid_argument("too many ring variables (max " + std::to_string(kMaxVariables) + ")");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var, std::uint32_t power) {
  if (var >= ring->size()) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(var, power), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  sort_and_combine(p.ring_->order(), terms);
  p.terms_ = std::move(terms);
  return p;
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return static_cast<int>(d);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[var] != 0; });
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t v = 0; v < ring_->size(); ++v)
    if (involves(v)) out.push_back(v);
  return out;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_[0].monomial.degree(); });
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Rational(0);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(ring_->order(), terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(ring_->order(), terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.multiply_monomial(b.terms_[0].monomial, b.terms_[0].coefficient);
  if (a.terms_.size() == 1) return b.multiply_monomial(a.terms_[0].monomial, a.terms_[0].coefficient);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
  return Polynomial::from_terms(a.ring_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplicative orders keep the sort intact.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coefficient * e});
  }
  return from_terms(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong arity");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images,
                      const RingPtr& target) {
  const auto& ring = *f.ring();
  if (images.size() != ring.size()) throw std::invalid_argument("substitution arity mismatch");
  for (const auto& img : images)
    if (img && !img->ring()->same_as(*target)) throw RingMismatch();
  std::vector<std::vector<Polynomial>> powers(ring.size());
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[var]);
    return cache[e];
  };
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Polynomial prod(target, t.coefficient);
    for (std::size_t v = 0; v < ring.size(); ++v) {
      auto e = t.monomial[v];
      if (e == 0) continue;
      if (!images[v]) throw MissingAssignment(ring.name(v));
      prod *= power_of(v, e);
      if (prod.is_zero()) break;
    }
    for (const auto& pt : prod.terms()) out.push_back(pt);
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const Substitution& assignments, const RingPtr& target) {
  const auto& ring = *f.ring();
  std::vector<std::optional<Polynomial>> images(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (auto it = assignments.find(ring.name(v)); it != assignments.end()) {
      images[v] = it->second;
    } else if (f.involves(v)) {
      throw MissingAssignment(ring.name(v));
    }
  }
  return substitute(f, images, target);
}

Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->same_as(*target)) return Polynomial::from_terms(target, f.terms());
  const auto& ring = *f.ring();
  std::vector<std::size_t> where(ring.size(), kMaxVariables);
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (auto idx = target->index_of(ring.name(v))) {
      where[v] = *idx;
    } else if (f.involves(v)) {
      throw UnknownVariable(ring.name(v));
    }
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < ring.size(); ++v)
      if (t.monomial[v] != 0) m.set(where[v], t.monomial[v]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial normalize_integer_primitive(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial();
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  const Term* lead = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.monomial, lead->monomial) > 0) lead = &t;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (lead->coefficient < 0) scale = -scale;
  return f * scale;
}

Polynomial normalize_integer_primitive(const Polynomial& f) {
  return normalize_integer_primitive(f, MonomialOrder::grevlex());
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ZeroPolynomial();
  const auto& ring = f.ring();
  const Term& lg = g.leading_term();
  Polynomial r = f;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.monomial.divides(lr.monomial)) return std::nullopt;
    Monomial m = lr.monomial / lg.monomial;
    Rational c = lr.coefficient / lg.coefficient;
    quotient.push_back({m, c});
    r -= g.multiply_monomial(m, c);
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    auto e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [e, terms] : buckets) out.emplace(e, Polynomial::from_terms(f.ring(), std::move(terms)));
  return out;
}

namespace {

Polynomial gcd_nonzero(const Polynomial& f, const Polynomial& g);

Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial c;
  bool first = true;
  for (auto& [e, coeff] : coefficients_in(f, var)) {
    if (first) {
      c = normalize_integer_primitive(coeff);
      first = false;
    } else {
      c = gcd_nonzero(c, coeff);
    }
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial primitive_part_in(const Polynomial& f, std::size_t var) {
  auto c = content_in(f, var);
  if (c.is_constant()) return f;
  return *divide_exact(f, c);
}

Polynomial leading_coefficient_in(const Polynomial& f, std::size_t var) {
  return coefficients_in(f, var).rbegin()->second;
}

// Pseudo-remainder of f by g with respect to var.
Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, std::size_t var) {
  auto dg = g.degree_in(var);
  Polynomial lg = leading_coefficient_in(g, var);
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    auto df = f.degree_in(var);
    Polynomial lf = leading_coefficient_in(f, var);
    f = lg * f - lf * g.multiply_monomial(Monomial::variable(var, df - dg), Rational(1));
  }
  return f;
}

Polynomial gcd_nonzero(const Polynomial& f, const Polynomial& g) {
  const auto& ring = f.ring();
  Polynomial one(ring, Rational(1));
  if (f.is_constant() || g.is_constant()) return one;
  auto fv = f.variables(), gv = g.variables();
  std::vector<std::size_t> all;
  std::set_union(fv.begin(), fv.end(), gv.begin(), gv.end(), std::back_inserter(all));
  if (all.size() == 1) {
    auto v = all[0];
    auto h = gcd(UnivariatePolynomial::from_polynomial(f, v), UnivariatePolynomial::from_polynomial(g, v));
    return normalize_integer_primitive(h.to_polynomial(ring, v));
  }
  std::vector<std::size_t> common;
  std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(), std::back_inserter(common));
  if (common.empty()) {
    // Any common factor is free of every variable, hence constant.
    return one;
  }
  for (auto v : all) {
    bool in_f = f.involves(v), in_g = g.involves(v);
    if (in_f && !in_g) return gcd_nonzero(content_in(f, v), g);
    if (in_g && !in_f) return gcd_nonzero(f, content_in(g, v));
  }
  // Main variable: the common one of least combined degree.
  std::size_t v = common[0];
  for (auto c : common)
    if (f.degree_in(c) + g.degree_in(c) < f.degree_in(v) + g.degree_in(v)) v = c;

  Polynomial cf = content_in(f, v), cg = content_in(g, v);
  Polynomial c = gcd_nonzero(cf, cg);
  Polynomial a = cf.is_constant() ? f : *divide_exact(f, cf);
  Polynomial b = cg.is_constant() ? g : *divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return normalize_integer_primitive(c);
    a = std::move(b);
    b = normalize_integer_primitive(primitive_part_in(r, v));
  }
  return normalize_integer_primitive(c * primitive_part_in(b, v));
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) return f;
  if (f.is_zero()) return normalize_integer_primitive(g);
  if (g.is_zero()) return normalize_integer_primitive(f);
  if (!f.ring()->same_as(*g.ring())) throw RingMismatch();
  return gcd_nonzero(f, g);
}

Polynomial squarefree_multivariate(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.is_constant()) return Polynomial(f.ring(), Rational(1));
  Polynomial g = normalize_integer_primitive(f);
  Polynomial common = g;
  for (auto v : f.variables()) {
    common = gcd(common, g.derivative(v));
    if (common.is_constant()) return g;
  }
  return normalize_integer_primitive(*divide_exact(g, common));
}

}  // namespace ddisc
