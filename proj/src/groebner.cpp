#include "ddisc/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ddisc/univariate.hpp"

namespace ddisc {

namespace {

using Clock = std::chrono::steady_clock;

struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

IPoly to_ipoly(const Polynomial& f, const MonomialOrder& order) {
  Integer den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  IPoly p;
  p.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational scaled = t.coefficient * den;
    p.push_back({t.monomial, scaled.get_num()});
  }
  std::sort(p.begin(), p.end(), [&](const ITerm& a, const ITerm& b) { return order.compare(a.m, b.m) > 0; });
  make_primitive(p);
  return p;
}

Polynomial to_polynomial(const IPoly& p, const RingPtr& ring, bool monic) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) {
    Rational c(t.c);
    if (monic) {
      c /= p.front().c;
      c.canonicalize();
    }
    terms.push_back({t.m, std::move(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// a*ma*A[1..] - b*mb*B[1..]: the combination of two polynomials whose scaled
// leading terms cancel.
IPoly cancel_leading(const MonomialOrder& order, const Integer& a, const Monomial& ma, const IPoly& A,
                     const Integer& b, const Monomial& mb, const IPoly& B) {
  IPoly out;
  out.reserve(A.size() + B.size());
  bool shift_a = !ma.is_one(), shift_b = !mb.is_one();
  std::size_t i = 1, j = 1;
  Monomial xa, xb;
  if (i < A.size()) xa = shift_a ? A[i].m * ma : A[i].m;
  if (j < B.size()) xb = shift_b ? B[j].m * mb : B[j].m;
  Integer tmp;
  while (i < A.size() && j < B.size()) {
    int c = order.compare(xa, xb);
    if (c > 0) {
      out.push_back({xa, a * A[i].c});
      if (++i < A.size()) xa = shift_a ? A[i].m * ma : A[i].m;
    } else if (c < 0) {
      out.push_back({xb, -b * B[j].c});
      if (++j < B.size()) xb = shift_b ? B[j].m * mb : B[j].m;
    } else {
      tmp = a * A[i].c;
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), B[j].c.get_mpz_t());
      if (tmp != 0) out.push_back({xa, tmp});
      if (++i < A.size()) xa = shift_a ? A[i].m * ma : A[i].m;
      if (++j < B.size()) xb = shift_b ? B[j].m * mb : B[j].m;
    }
  }
  for (; i < A.size(); ++i) out.push_back({shift_a ? A[i].m * ma : A[i].m, a * A[i].c});
  for (; j < B.size(); ++j) out.push_back({shift_b ? B[j].m * mb : B[j].m, -b * B[j].c});
  return out;
}

class Engine {
 public:
  Engine(const MonomialOrder& order, const GroebnerLimits& limits) : order_(order), limits_(limits) {
    auto now = Clock::now();
    deadline_ = now + limits.max_time;
    if (limits.deadline && *limits.deadline < deadline_) deadline_ = *limits.deadline;
  }

  bool unit() const { return unit_; }

  void add_generator(IPoly p) {
    if (unit_) return;
    std::uint32_t sugar = 0;
    for (const auto& t : p) sugar = std::max(sugar, t.m.degree());
    p = reduce(std::move(p), kNoSkip, sugar);
    if (!p.empty()) insert(std::move(p), sugar);
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      Pair pr = pairs_.back();
      pairs_.pop_back();
      if (++processed_ > limits_.max_pairs)
        throw ResourceLimit("Groebner basis exceeded " + std::to_string(limits_.max_pairs) + " S-pairs");
      check_time();
      const IPoly& A = polys_[pr.i];
      const IPoly& B = polys_[pr.j];
      Integer g;
      mpz_gcd(g.get_mpz_t(), A[0].c.get_mpz_t(), B[0].c.get_mpz_t());
      Integer a = B[0].c / g, b = A[0].c / g;
      IPoly s = cancel_leading(order_, a, pr.lcm / leads_[pr.i], A, b, pr.lcm / leads_[pr.j], B);
      make_primitive(s);
      std::uint32_t sugar = pr.sugar;
      s = reduce(std::move(s), kNoSkip, sugar);
      if (!s.empty()) insert(std::move(s), sugar);
    }
  }

  std::vector<IPoly> reduced_basis() {
    if (unit_) return {IPoly{ITerm{Monomial{}, Integer(1)}}};
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) idx.push_back(i);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return order_.compare(leads_[x], leads_[y]) < 0; });
    std::vector<IPoly> out;
    out.reserve(idx.size());
    std::uint32_t unused = 0;
    for (auto i : idx) out.push_back(reduce(polys_[i], i, unused));
    return out;
  }

 private:
  static constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar;
    std::size_t seq;
  };

  void check_time() const {
    if (Clock::now() > deadline_) throw ResourceLimit("Groebner basis exceeded its time budget");
  }

  // Index of the shortest active reducer whose leading monomial divides m.
  std::size_t find_reducer(const Monomial& m, std::size_t skip) const {
    std::uint32_t mask = m.support_mask();
    std::size_t best = kNoSkip;
    for (auto i : active_list_) {
      if (i == skip || (masks_[i] & ~mask) != 0) continue;
      if (!leads_[i].divides(m)) continue;
      if (best == kNoSkip || polys_[i].size() < polys_[best].size()) best = i;
    }
    return best;
  }

  // Full fraction-free reduction; the result is primitive with positive leading
  // coefficient. `sugar` is raised to cover every reducer used.
  IPoly reduce(IPoly p, std::size_t skip, std::uint32_t& sugar) {
    IPoly done;
    std::size_t start = 0;
    std::size_t steps = 0;
    static const Monomial one{};
    while (start < p.size()) {
      std::size_t r = find_reducer(p[start].m, skip);
      if (r == kNoSkip) {
        done.push_back(std::move(p[start]));
        ++start;
        continue;
      }
      const IPoly& g = polys_[r];
      Integer G;
      mpz_gcd(G.get_mpz_t(), p[start].c.get_mpz_t(), g[0].c.get_mpz_t());
      Integer a = g[0].c / G, b = p[start].c / G;
      Monomial m = p[start].m / leads_[r];
      sugar = std::max(sugar, m.degree() + sugars_[r]);
      if (start > 0) p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(start));
      p = cancel_leading(order_, a, one, p, b, m, g);
      start = 0;
      if (a != 1)
        for (auto& t : done) t.c *= a;
      if (++steps % 16 == 0) remove_content(done, p);
      check_time();
    }
    make_primitive(done);
    return done;
  }

  static void remove_content(IPoly& done, IPoly& p) {
    Integer g = 0;
    for (const auto* part : {&done, &p}) {
      for (const auto& t : *part) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0 || g == 1) return;
    for (auto* part : {&done, &p})
      for (auto& t : *part) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }

  void insert(IPoly p, std::uint32_t sugar) {
    if (p[0].m.is_one()) {
      unit_ = true;
      return;
    }
    std::size_t h = polys_.size();
    sugars_.push_back(sugar);
    leads_.push_back(p[0].m);
    masks_.push_back(p[0].m.support_mask());
    polys_.push_back(std::move(p));
    active_.push_back(false);
    update(h);
  }

  // Gebauer-Moeller pair update.
  void update(std::size_t h) {
    const Monomial& hl = leads_[h];
    std::vector<Pair> fresh;
    for (auto g : active_list_) {
      Monomial l = leads_[g].lcm(hl);
      std::uint32_t sugar = std::max(sugars_[g] + l.degree() - leads_[g].degree(), sugars_[h] + l.degree() - hl.degree());
      fresh.push_back({g, h, l, sugar, seq_++});
    }

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Pair& p = fresh[k];
      bool keep = leads_[p.i].coprime(hl);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < fresh.size() && keep; ++l)
          if (fresh[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < kept.size() && keep; ++l)
          if (kept[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      if (hl.divides(p.lcm) && !(leads_[p.i].lcm(hl) == p.lcm) && !(leads_[p.j].lcm(hl) == p.lcm)) continue;
      next.push_back(p);
    }
    for (const auto& p : kept)
      if (!leads_[p.i].coprime(hl)) next.push_back(p);
    pairs_ = std::move(next);
    const bool use_sugar = order_.kind() != OrderKind::GrevLex;
    std::sort(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
      // Smallest lcm (by degree, then order) is processed first, from the back. Elimination
      // orders select by sugar before that; on GrevLex plain degree does better here.
      if (use_sugar && a.sugar != b.sugar) return a.sugar > b.sugar;
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
      int c = order_.compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      return a.seq > b.seq;
    });

    std::vector<std::size_t> still;
    for (auto g : active_list_) {
      if (hl.divides(leads_[g])) {
        active_[g] = false;
      } else {
        still.push_back(g);
      }
    }
    still.push_back(h);
    active_[h] = true;
    active_list_ = std::move(still);
  }

  MonomialOrder order_;
  GroebnerLimits limits_;
  Clock::time_point deadline_;
  std::vector<IPoly> polys_;
  std::vector<Monomial> leads_;
  std::vector<std::uint32_t> sugars_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<std::size_t> active_list_;
  std::vector<Pair> pairs_;
  std::size_t seq_ = 0;
  std::size_t processed_ = 0;
  bool unit_ = false;
};

// Rational terms sorted under an arbitrary order.
std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Term> t = f.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return t;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    const Term* lead = &e.terms().front();
    for (const auto& t : e.terms())
      if (order_.compare(t.monomial, lead->monomial) > 0) lead = &t;
    leads_.push_back(lead->monomial);
    sorted_.push_back(sorted_terms(e, order_));
  }
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  const auto& basis = sorted_;
  std::vector<Term> p = sorted_terms(f, order_);
  std::vector<Term> rem;
  while (!p.empty()) {
    const Term lead = p.front();
    std::size_t k = 0;
    while (k < leads_.size() && !leads_[k].divides(lead.monomial)) ++k;
    if (k == leads_.size()) {
      rem.push_back(lead);
      p.erase(p.begin());
      continue;
    }
    const auto& g = basis[k];
    Monomial m = lead.monomial / leads_[k];
    Rational c = lead.coefficient / g[0].coefficient;
    std::vector<Term> next;
    next.reserve(p.size() + g.size());
    std::size_t i = 1, j = 1;
    while (i < p.size() || j < g.size()) {
      int cmp;
      Monomial gm;
      if (j < g.size()) gm = g[j].monomial * m;
      if (i >= p.size()) {
        cmp = -1;
      } else if (j >= g.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(p[i].monomial, gm);
      }
      if (cmp > 0) {
        next.push_back(std::move(p[i++]));
      } else if (cmp < 0) {
        next.push_back({gm, -c * g[j++].coefficient});
      } else {
        Rational s = p[i].coefficient - c * g[j].coefficient;
        if (s != 0) next.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    p = std::move(next);
  }
  return Polynomial::from_terms(ring_, std::move(rem));
}

std::vector<Monomial> GroebnerBasis::standard_monomials(std::span<const std::size_t> vars) const {
  if (is_unit()) return {};
  std::vector<std::uint32_t> bound(vars.size(), 0);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    for (const auto& l : leads_)
      if (l[vars[k]] > 0 && l.degree() == l[vars[k]] && (bound[k] == 0 || l[vars[k]] < bound[k]))
        bound[k] = l[vars[k]];
    if (bound[k] == 0)
      throw NotZeroDimensional("ideal is not zero-dimensional in " + ring_->name(vars[k]));
  }
  std::vector<Monomial> out;
  Monomial current;
  auto divisible = [&](const Monomial& m) {
    return std::any_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Standard monomials form an order ideal, so pruning on divisibility is safe.
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == vars.size()) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t e = 0; e < bound[k]; ++e) {
      current.set(vars[k], e);
      if (divisible(current)) break;
      self(self, k + 1);
    }
    current.set(vars[k], 0);
  };
  walk(walk, 0);
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerLimits& limits) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const RingPtr& ring = generators[0].ring();
  for (const auto& g : generators)
    if (!g.ring()->same_as(*ring)) throw RingMismatch();
  if (ring->size() > kMaxVariables) throw std::invalid_argument("ring too large");

  Engine engine(order, limits);
  std::vector<IPoly> inputs;
  for (const auto& g : generators)
    if (!g.is_zero()) inputs.push_back(to_ipoly(g, order));
  // Small generators first keeps early reducers sparse.
  std::stable_sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
    return order.compare(a[0].m, b[0].m) < 0;
  });
  for (auto& p : inputs) engine.add_generator(std::move(p));
  engine.run();

  std::vector<Polynomial> elements;
  for (const auto& p : engine.reduced_basis()) elements.push_back(to_polynomial(p, ring, true));
  return GroebnerBasis(ring, order, std::move(elements));
}

EliminationResult eliminate(std::span<const Polynomial> generators, std::span<const std::size_t> drop_vars,
                            const GroebnerLimits& limits) {
  if (generators.empty()) throw std::invalid_argument("eliminate needs at least one generator");
  const RingPtr& ring = generators[0].ring();
  std::vector<std::string> names;
  std::vector<bool> dropped(ring->size(), false);
  for (auto v : drop_vars) {
    if (v >= ring->size()) throw std::out_of_range("drop variable out of range");
    dropped[v] = true;
  }
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (dropped[v]) names.push_back(ring->name(v));
  std::size_t split = names.size();
  for (std::size_t v = 0; v < ring->size(); ++v)
    if (!dropped[v]) names.push_back(ring->name(v));
  auto work = Ring::make(names);

  std::vector<Polynomial> mapped;
  mapped.reserve(generators.size());
  for (const auto& g : generators) mapped.push_back(map_to_ring(g, work));
  auto basis = buchberger(mapped, MonomialOrder::block(split), limits);

  EliminationResult result;
  for (std::size_t k = 0; k < basis.elements().size(); ++k) {
    if (basis.leading_monomials()[k].partial_degree(0, split) != 0) continue;
    result.generators.push_back(map_to_ring(basis.elements()[k], ring));
  }
  result.is_zero_ideal = result.generators.empty();
  result.is_principal = result.generators.size() == 1;
  return result;
}

std::size_t quotient_dimension(const GroebnerBasis& basis, std::span<const std::size_t> unknowns) {
  return basis.standard_monomials(unknowns).size();
}

Polynomial univariate_generator(const EliminationResult& result) {
  if (result.is_zero_ideal || result.generators.empty())
    throw ZeroIdeal("elimination ideal is zero: the projection is dominant");
  if (result.generators.size() != 1)
    throw NotPrincipal("elimination ideal has " + std::to_string(result.generators.size()) + " generators");
  const Polynomial& g = result.generators[0];
  if (g.variables().size() > 1) throw NotPrincipal("generator is not univariate");
  return g * Rational(1 / g.leading_coefficient());
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  auto vars = f.variables();
  if (vars.empty()) return Polynomial(f.ring(), Rational(1));
  if (vars.size() > 1) throw std::invalid_argument("squarefree_part expects a univariate polynomial");
  auto u = UnivariatePolynomial::from_polynomial(f, vars[0]);
  return squarefree_part(u).to_polynomial(f.ring(), vars[0]);
}

Polynomial minimal_polynomial(const GroebnerBasis& basis, const Polynomial& f, std::span<const std::size_t> vars,
                              const RingPtr& target, std::size_t var) {
  auto standard = basis.standard_monomials(vars);
  if (standard.empty()) return Polynomial(target, Rational(1));
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < standard.size(); ++i) index.emplace(standard[i], i);
  const std::size_t dim = standard.size();

  struct Row {
    std::size_t pivot;
    std::vector<Rational> vec;
    std::vector<Rational> combo;  // expresses vec in powers of f
  };
  std::vector<Row> rows;
  Polynomial power(basis.ring(), Rational(1));
  for (std::size_t k = 0; k <= dim; ++k) {
    if (k > 0) power = basis.normal_form(power * f);
    std::vector<Rational> vec(dim);
    for (const auto& t : power.terms()) vec[index.at(t.monomial)] = t.coefficient;
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const auto& r : rows) {
      if (vec[r.pivot] == 0) continue;
      Rational c = vec[r.pivot] / r.vec[r.pivot];
      for (std::size_t i = 0; i < dim; ++i)
        if (r.vec[i] != 0) vec[i] -= c * r.vec[i];
      for (std::size_t i = 0; i < r.combo.size(); ++i)
        if (r.combo[i] != 0) combo[i] -= c * r.combo[i];
    }
    auto nz = std::find_if(vec.begin(), vec.end(), [](const Rational& q) { return q != 0; });
    if (nz == vec.end()) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i <= k; ++i)
        if (combo[i] != 0) terms.push_back({Monomial::variable(var, static_cast<std::uint32_t>(i)), combo[i]});
      return Polynomial::from_terms(target, std::move(terms));
    }
    rows.push_back({static_cast<std::size_t>(nz - vec.begin()), std::move(vec), std::move(combo)});
  }
  throw std::logic_error("minimal polynomial exceeds the quotient dimension");
}

Polynomial eliminate_to_variable(std::span<const Polynomial> generators, std::size_t var,
                                 const GroebnerLimits& limits) {
  if (generators.empty()) throw std::invalid_argument("eliminate_to_variable needs generators");
  const RingPtr& ring = generators[0].ring();
  auto basis = buchberger(generators, MonomialOrder::grevlex(), limits);
  if (basis.is_unit()) return Polynomial(ring, Rational(1));
  std::vector<std::size_t> all(ring->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  try {
    return minimal_polynomial(basis, Polynomial::variable(ring, var), all, ring, var);
  } catch (const NotZeroDimensional&) {
  }
  std::vector<std::size_t> drop;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (i != var) drop.push_back(i);
  return univariate_generator(eliminate(generators, drop, limits));
}

bool verify_groebner(const GroebnerBasis& basis, std::span<const Polynomial> generators) {
  for (const auto& g : generators)
    if (!basis.normal_form(g).is_zero()) return false;
  const auto& els = basis.elements();
  const auto& leads = basis.leading_monomials();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      Monomial l = leads[i].lcm(leads[j]);
      // Elements are monic, so the S-polynomial needs no coefficient scaling.
      Polynomial s = els[i].multiply_monomial(l / leads[i], Rational(1)) -
                     els[j].multiply_monomial(l / leads[j], Rational(1));
      if (!basis.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace ddisc
