#include "ddisc/discriminant.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ddisc/random.hpp"

namespace ddisc {

namespace {

// Stream tags for derive_seed.
enum : std::uint64_t { kProbe = 1, kShear = 2, kOnePass = 3, kStepwise = 4, kFresh = 5 };

constexpr int kMaxRetries = 5;
constexpr int kMaxShearRounds = 8;

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

std::vector<Rational> random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.integer(lo, hi));
  return v;
}

// Exponent vectors over `vars` with |alpha| == j (or <= j), alpha_v <= bound[v].
std::vector<Monomial> stratum(const std::vector<std::size_t>& vars, const std::vector<int>& bound, int j,
                              bool exact) {
  std::vector<Monomial> out;
  Monomial m;
  auto walk = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == vars.size()) {
      if (!exact || left == 0) out.push_back(m);
      return;
    }
    int top = std::min(left, bound[vars[k]]);
    for (int e = 0; e <= top; ++e) {
      m.set(vars[k], static_cast<std::uint32_t>(e));
      self(self, k + 1, left - e);
    }
    m.set(vars[k], 0);
  };
  walk(walk, 0, j);
  return out;
}

Rational monomial_at(const Monomial& m, std::span<const Rational> point) {
  Rational v = 1;
  for (std::size_t i = 0; i < point.size(); ++i)
    for (std::uint32_t e = 0; e < m[i]; ++e) v *= point[i];
  return v;
}

UnivariatePolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UnivariatePolynomial acc;
  for (std::size_t l = 0; l < xs.size(); ++l) {
    if (ys[l] == 0) continue;
    UnivariatePolynomial basis({Rational(1)});
    Rational denom = 1;
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == l) continue;
      basis = basis * UnivariatePolynomial({-xs[m], Rational(1)});
      denom *= xs[l] - xs[m];
    }
    acc = acc + basis * UnivariatePolynomial({ys[l] / denom});
  }
  return acc;
}

DegreeProfile profile_of(const Polynomial& f, std::size_t parameters) {
  DegreeProfile p;
  p.total = f.is_zero() ? 0 : *f.total_degree();
  for (std::size_t k = 0; k < parameters; ++k) p.per_variable.push_back(static_cast<int>(f.degree_in(k)));
  return p;
}

// Coefficient extraction and solving shared by both interpolation strategies.
class Interpolator {
 public:
  Interpolator(const ParametricSystem& sheared, std::size_t pivot, const DegreeProfile& degrees,
               const DiscriminantOptions& options)
      : sys_(sheared), pivot_(pivot), d_(degrees.total), bound_(degrees.per_variable), options_(options),
        ring_(parameter_ring(sheared)) {
    for (std::size_t k = 0; k < sys_.parameter_count; ++k)
      if (k != pivot_) others_.push_back(k);
  }

  std::size_t samples = 0;
  std::size_t retries = 0;

  // C_1..C_d as polynomials in the non-pivot parameters.
  std::vector<Polynomial> one_pass() {
    std::vector<std::vector<Monomial>> strata(static_cast<std::size_t>(d_) + 1);
    std::size_t count = 0;
    for (int j = 1; j <= d_; ++j) {
      strata[static_cast<std::size_t>(j)] = stratum(others_, bound_, j, sys_.homogeneous);
      count = std::max(count, strata[static_cast<std::size_t>(j)].size());
    }
    for (int round = 0; round < kMaxRetries; ++round) {
      std::vector<std::vector<Rational>> points(count);
      std::vector<UnivariatePolynomial> values(count);
      std::vector<std::size_t> attempts(count, 0);
      parallel_for(count, options_.jobs, [&](std::size_t k) {
        for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
          Rng rng(derive_seed(options_.seed, {kOnePass, static_cast<std::uint64_t>(round), k,
                                              static_cast<std::uint64_t>(attempt)}));
          auto point = random_vector(rng, sys_.parameter_count, 1, 999);
          point[pivot_] = 0;
          attempts[k] = static_cast<std::size_t>(attempt) + 1;
          if (auto v = try_sample(point)) {
            points[k] = std::move(point);
            values[k] = std::move(*v);
            return;
          }
        }
        throw UnluckyRandomness("every sample degenerated for sample " + std::to_string(k), options_.seed);
      });
      for (auto a : attempts) {
        samples += a;
        retries += a - 1;
      }
      std::vector<Polynomial> c(static_cast<std::size_t>(d_) + 1, Polynomial(ring_));
      bool singular = false;
      for (int j = 1; j <= d_ && !singular; ++j) {
        auto sol = solve_stratum(strata[static_cast<std::size_t>(j)], j, points, values);
        if (!sol) singular = true;
        else c[static_cast<std::size_t>(j)] = std::move(*sol);
      }
      if (!singular) return c;
      ++retries;
    }
    throw UnluckyRandomness("sample matrices stayed singular", options_.seed);
  }

  std::vector<Polynomial> stepwise() {
    const std::size_t m = others_.size();
    for (int round = 0; round < kMaxRetries; ++round) {
      try {
        return stepwise_round(static_cast<std::uint64_t>(round), m);
      } catch (const SingularSampleMatrix&) {
      } catch (const DegreeDrop&) {
      } catch (const ZeroIdeal&) {
      }
      ++retries;
    }
    throw UnluckyRandomness("step-by-step interpolation kept hitting degenerate samples", options_.seed);
  }

  Polynomial assemble(const std::vector<Polynomial>& c) const {
    Polynomial t = Polynomial::variable(ring_, pivot_);
    Polynomial out = t.pow(static_cast<unsigned>(d_));
    for (int j = 1; j <= d_; ++j) out += c[static_cast<std::size_t>(j)] * t.pow(static_cast<unsigned>(d_ - j));
    return out;
  }

 private:
  std::optional<UnivariatePolynomial> try_sample(const std::vector<Rational>& point) {
    std::vector<Rational> b;
    for (auto k : others_) b.push_back(point[k]);
    try {
      auto a = intersect_sample(sys_, b, pivot_, d_, options_.limits);
      if (a.degree() > d_)
        throw UnluckyRandomness("sample degree " + std::to_string(a.degree()) + " exceeds probed degree " +
                                    std::to_string(d_),
                                options_.seed);
      return a;
    } catch (const DegreeDrop&) {
    } catch (const ZeroIdeal&) {
    }
    return std::nullopt;
  }

  // Coefficient of u_pivot^(d-j) over the monomials of one stratum.
  std::optional<Polynomial> solve_stratum(const std::vector<Monomial>& monomials, int j,
                                          const std::vector<std::vector<Rational>>& points,
                                          const std::vector<UnivariatePolynomial>& values) const {
    const std::size_t n = monomials.size();
    if (n == 0) return Polynomial(ring_);
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t c = 0; c < n; ++c) mat[k][c] = monomial_at(monomials[c], points[k]);
      rhs[k] = values[k].coefficient(d_ - j);
    }
    auto sol = solve_linear(std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<Term> terms;
    for (std::size_t c = 0; c < n; ++c)
      if ((*sol)[c] != 0) terms.push_back({monomials[c], (*sol)[c]});
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  std::vector<UnivariatePolynomial> sample_batch(const std::vector<std::vector<Rational>>& points) {
    std::vector<UnivariatePolynomial> values(points.size());
    parallel_for(points.size(), options_.jobs, [&](std::size_t k) {
      auto v = try_sample(points[k]);
      if (!v) throw DegreeDrop("degenerate sample");
      values[k] = std::move(*v);
    });
    samples += points.size();
    return values;
  }

  std::vector<Polynomial> stepwise_round(std::uint64_t round, std::size_t m) {
    Rng rng(derive_seed(options_.seed, {kStepwise, round}));
    std::vector<Rational> z = random_vector(rng, sys_.parameter_count, 1, 999);
    z[pivot_] = 0;
    const auto dd = static_cast<std::size_t>(d_);

    auto base = sample_batch({z});
    std::vector<Polynomial> current(dd + 1, Polynomial(ring_));
    for (int j = 1; j <= d_; ++j)
      current[static_cast<std::size_t>(j)] = Polynomial(ring_, base[0].coefficient(d_ - j));

    const std::size_t stages = m == 0 ? 0 : (sys_.homogeneous ? m - 1 : m);
    for (std::size_t s = 1; s <= stages; ++s) {
      const std::size_t v = others_[s - 1];
      std::vector<std::size_t> prior(others_.begin(), others_.begin() + static_cast<std::ptrdiff_t>(s - 1));
      const int dv = std::min(bound_[v], d_);

      std::vector<Rational> betas{z[v]};
      while (betas.size() < static_cast<std::size_t>(dv) + 1) {
        Rational beta(rng.integer(1, 999));
        if (std::find(betas.begin(), betas.end(), beta) == betas.end()) betas.push_back(beta);
      }

      std::vector<std::vector<Monomial>> strata(dd + 1);
      std::size_t count = 0;
      for (int j = 1; j <= d_; ++j) {
        strata[static_cast<std::size_t>(j)] = stratum(prior, bound_, j, false);
        count = std::max(count, strata[static_cast<std::size_t>(j)].size());
      }

      std::vector<std::vector<Polynomial>> at{current};
      for (std::size_t l = 1; l < betas.size(); ++l) {
        std::vector<std::vector<Rational>> points(count, z);
        for (auto& p : points) {
          p[v] = betas[l];
          for (auto w : prior) p[w] = Rational(rng.integer(1, 999));
        }
        auto values = sample_batch(points);
        std::vector<Polynomial> c(dd + 1, Polynomial(ring_));
        for (int j = 1; j <= d_; ++j) {
          auto sol = solve_stratum(strata[static_cast<std::size_t>(j)], j, points, values);
          if (!sol) throw SingularSampleMatrix("singular sample matrix");
          c[static_cast<std::size_t>(j)] = std::move(*sol);
        }
        at.push_back(std::move(c));
      }

      for (int j = 1; j <= d_; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        std::vector<Monomial> support;
        for (const auto& level : at)
          for (const auto& t : level[jj].terms())
            if (std::find(support.begin(), support.end(), t.monomial) == support.end())
              support.push_back(t.monomial);
        Polynomial next(ring_);
        for (const auto& alpha : support) {
          std::vector<Rational> ys;
          for (const auto& level : at) ys.push_back(level[jj].coefficient_of(alpha));
          auto poly = interpolate(betas, ys);
          for (int e = 0; e <= poly.degree(); ++e) {
            if (poly.coefficient(e) == 0) continue;
            Monomial mono = alpha;
            mono.set(v, static_cast<std::uint32_t>(e));
            next += Polynomial::from_terms(ring_, {Term{mono, poly.coefficient(e)}});
          }
        }
        current[jj] = std::move(next);
      }
    }

    // Every C_j is homogeneous of degree j, so the last frozen variable is
    // restored from the degree deficit of each term.
    if (sys_.homogeneous && m >= 1) {
      const std::size_t w = others_[m - 1];
      for (int j = 1; j <= d_; ++j) {
        std::vector<Term> terms;
        for (const auto& t : current[static_cast<std::size_t>(j)].terms()) {
          const std::uint32_t gap = static_cast<std::uint32_t>(j) - t.monomial.degree();
          Rational c = t.coefficient;
          for (std::uint32_t e = 0; e < gap; ++e) c /= z[w];
          Monomial mono = t.monomial;
          mono.set(w, gap);
          terms.push_back({mono, c});
        }
        current[static_cast<std::size_t>(j)] = Polynomial::from_terms(ring_, std::move(terms));
      }
    }
    return current;
  }

  const ParametricSystem& sys_;
  std::size_t pivot_;
  int d_;
  std::vector<int> bound_;
  const DiscriminantOptions& options_;
  RingPtr ring_;
  std::vector<std::size_t> others_;
};

}  // namespace

bool ShearTransform::is_identity() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Integer& a) { return a == 0; });
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Elimination:
      return "elimination";
    case Method::InterpolationS1:
      return "interpolation-s1";
    case Method::InterpolationS2:
      return "interpolation-s2";
  }
  return "unknown";
}

RingPtr parameter_ring(const ParametricSystem& sys) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < sys.parameter_count; ++k) names.push_back(sys.parameter_name(k));
  return Ring::make(names);
}

UnivariatePolynomial restrict_to_line(const ParametricSystem& sys, std::span<const Rational> a,
                                      std::span<const Rational> b, const GroebnerLimits& limits) {
  if (a.size() != sys.parameter_count || b.size() != sys.parameter_count)
    throw std::invalid_argument("line needs one coefficient pair per parameter");
  std::vector<std::string> names(sys.ring->names().begin(),
                                 sys.ring->names().begin() + static_cast<std::ptrdiff_t>(sys.unknown_count));
  names.push_back(fresh_name(*sys.ring, "t"));
  auto ring = Ring::make(names);
  const std::size_t t = sys.unknown_count;

  std::vector<std::optional<Polynomial>> images(sys.ring->size());
  for (std::size_t i = 0; i < sys.unknown_count; ++i) images[i] = Polynomial::variable(ring, i);
  for (std::size_t k = 0; k < sys.parameter_count; ++k)
    images[sys.parameter(k)] = Polynomial::variable(ring, t) * a[k] + Polynomial(ring, b[k]);

  std::vector<Polynomial> gens;
  for (const auto& f : sys.equations) gens.push_back(substitute(f, images, ring));
  gens.push_back(substitute(sys.jacobian, images, ring));
  auto g = eliminate_to_variable(gens, t, limits);
  return squarefree_part(UnivariatePolynomial::from_polynomial(g, t));
}

DiscriminantOutput dxj_elimination(const ParametricSystem& sys, const GroebnerLimits& limits) {
  DiscriminantOutput out;
  out.method = Method::Elimination;
  out.shear.coefficients.assign(sys.parameter_count, Integer(0));
  auto pring = parameter_ring(sys);
  std::vector<Polynomial> gens = sys.equations;
  gens.push_back(sys.jacobian);
  auto result = eliminate(gens, sys.unknowns(), limits);
  if (result.is_zero_ideal) {
    out.polynomial = Polynomial(pring, Rational(1));
    out.warnings.push_back("ProjectionNotHypersurface: the elimination ideal is zero; using the constant 1");
    out.degrees = profile_of(out.polynomial, sys.parameter_count);
    return out;
  }
  Polynomial g(pring);
  for (const auto& gen : result.generators) g = gcd(g, map_to_ring(gen, pring));
  if (g.is_constant()) {
    out.polynomial = Polynomial(pring, Rational(1));
    if (!result.generators[0].is_constant())
      out.warnings.push_back("the elimination ideal has no codimension-1 component; using the constant 1");
  } else {
    if (!result.is_principal)
      out.warnings.push_back("non-principal elimination ideal; kept the gcd of its generators");
    out.polynomial = normalize_integer_primitive(squarefree_multivariate(g));
  }
  out.degrees = profile_of(out.polynomial, sys.parameter_count);
  return out;
}

DegreeProfile degree_probe(const ParametricSystem& sys, std::uint64_t seed, const GroebnerLimits& limits,
                           std::size_t* retries) {
  const std::size_t n = sys.parameter_count;
  DegreeProfile profile;
  auto run = [&](std::size_t slot, auto&& make_line) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      Rng rng(derive_seed(seed, {kProbe, slot, static_cast<std::uint64_t>(attempt)}));
      auto [a, b] = make_line(rng);
      try {
        return restrict_to_line(sys, a, b, limits).degree();
      } catch (const ZeroIdeal&) {
        if (retries) ++*retries;
      }
    }
    throw UnluckyRandomness("degree probe found only zero elimination ideals", seed);
  };
  for (std::size_t i = 0; i < n; ++i) {
    profile.per_variable.push_back(run(i, [&](Rng& rng) {
      std::vector<Rational> a(n, Rational(0));
      auto b = random_vector(rng, n, 1, 999);
      a[i] = 1;
      b[i] = 0;
      return std::pair{a, b};
    }));
  }
  profile.total = run(n, [&](Rng& rng) {
    auto a = random_vector(rng, n, 1, 99);
    auto b = random_vector(rng, n, 1, 99);
    return std::pair{a, b};
  });
  return profile;
}

ParametricSystem apply_shear(const ParametricSystem& sys, const ShearTransform& shear) {
  if (shear.is_identity()) return sys;
  std::vector<std::optional<Polynomial>> images(sys.ring->size());
  for (std::size_t i = 0; i < sys.ring->size(); ++i) images[i] = Polynomial::variable(sys.ring, i);
  Polynomial pivot = Polynomial::variable(sys.ring, sys.parameter(shear.pivot));
  for (std::size_t k = 0; k < sys.parameter_count; ++k)
    if (k != shear.pivot && shear.coefficients[k] != 0)
      images[sys.parameter(k)] = pivot * Rational(shear.coefficients[k]) + *images[sys.parameter(k)];
  ParametricSystem out = sys;
  for (auto& f : out.equations) f = substitute(f, images, sys.ring);
  out.jacobian = substitute(sys.jacobian, images, sys.ring);
  return out;
}

LinearOperatorResult linear_operator(const ParametricSystem& sys, std::size_t pivot, std::uint64_t seed,
                                     const GroebnerLimits& limits) {
  if (pivot >= sys.parameter_count) throw std::out_of_range("pivot parameter out of range");
  LinearOperatorResult out;
  out.shear.pivot = pivot;
  out.shear.coefficients.assign(sys.parameter_count, Integer(0));
  out.initial_degrees = degree_probe(sys, derive_seed(seed, {kShear, 0}), limits, &out.retries);
  out.degrees = out.initial_degrees;
  out.system = sys;
  if (out.degrees.total == out.degrees.per_variable[pivot]) return out;
  for (int round = 1; round <= kMaxShearRounds; ++round) {
    Rng rng(derive_seed(seed, {kShear, static_cast<std::uint64_t>(round), 1}));
    for (std::size_t k = 0; k < sys.parameter_count; ++k)
      out.shear.coefficients[k] = k == pivot ? Integer(0) : rng.integer(1, 99);
    out.system = apply_shear(sys, out.shear);
    out.degrees = degree_probe(out.system, derive_seed(seed, {kShear, static_cast<std::uint64_t>(round)}), limits,
                               &out.retries);
    if (out.degrees.total == out.degrees.per_variable[pivot]) return out;
    ++out.retries;
  }
  throw UnluckyRandomness("no shear brought the pivot degree up to the total degree", seed);
}

UnivariatePolynomial intersect_sample(const ParametricSystem& sys, std::span<const Rational> b, std::size_t keep,
                                      int expected_degree, const GroebnerLimits& limits) {
  if (keep >= sys.parameter_count || b.size() + 1 != sys.parameter_count)
    throw std::invalid_argument("intersect_sample needs a value for every parameter except the kept one");
  std::vector<Rational> a(sys.parameter_count, Rational(0)), full(sys.parameter_count, Rational(0));
  a[keep] = 1;
  for (std::size_t k = 0, i = 0; k < sys.parameter_count; ++k)
    if (k != keep) full[k] = b[i++];
  auto g = restrict_to_line(sys, a, full, limits);
  if (g.degree() < expected_degree)
    throw DegreeDrop("sample has degree " + std::to_string(g.degree()) + ", expected " +
                     std::to_string(expected_degree));
  return g;
}

DiscriminantOutput dxj_interpolate(const ParametricSystem& sys, const DiscriminantOptions& options) {
  DiscriminantOutput out;
  out.method = options.strategy == Strategy::S1 ? Method::InterpolationS1 : Method::InterpolationS2;
  out.seed = options.seed;
  auto pring = parameter_ring(sys);

  auto lo = linear_operator(sys, options.pivot, options.seed, options.limits);
  out.degrees = lo.initial_degrees;
  out.shear = lo.shear;
  out.retries = lo.retries;
  if (lo.degrees.total == 0) {
    out.polynomial = Polynomial(pring, Rational(1));
    out.warnings.push_back("total degree 0: the constant-1 convention applies; elimination is the reference method");
    return out;
  }

  Interpolator interp(lo.system, options.pivot, lo.degrees, options);
  auto c = options.strategy == Strategy::S1 ? interp.one_pass() : interp.stepwise();
  Polynomial sheared = interp.assemble(c);
  out.samples = interp.samples;
  out.retries += interp.retries;

  std::vector<std::optional<Polynomial>> inverse(sys.parameter_count);
  Polynomial pivot = Polynomial::variable(pring, options.pivot);
  for (std::size_t k = 0; k < sys.parameter_count; ++k)
    inverse[k] = Polynomial::variable(pring, k) - pivot * Rational(lo.shear.coefficients[k]);
  out.polynomial = normalize_integer_primitive(substitute(sheared, inverse, pring));
  return out;
}

bool fresh_line_consistent(const ParametricSystem& sys, const Polynomial& dxj, std::uint64_t seed,
                           const GroebnerLimits& limits) {
  const std::size_t n = sys.parameter_count;
  Rng rng(derive_seed(seed, {kFresh}));
  auto a = random_vector(rng, n, 1, 99);
  auto b = random_vector(rng, n, 1, 99);
  UnivariatePolynomial eliminated;
  try {
    eliminated = restrict_to_line(sys, a, b, limits);
  } catch (const ZeroIdeal&) {
    return false;
  }
  auto tring = Ring::make({"t"});
  std::vector<std::optional<Polynomial>> images(dxj.ring()->size());
  for (std::size_t k = 0; k < n; ++k)
    images[k] = Polynomial::variable(tring, 0) * a[k] + Polynomial(tring, b[k]);
  auto restricted = substitute(dxj, images, tring);
  if (restricted.is_zero()) return false;
  return squarefree_part(UnivariatePolynomial::from_polynomial(restricted, 0)) == eliminated;
}

ParametricSystem freeze_parameters(const ParametricSystem& sys, const std::map<std::size_t, Rational>& values) {
  std::vector<std::string> names(sys.ring->names().begin(),
                                 sys.ring->names().begin() + static_cast<std::ptrdiff_t>(sys.unknown_count));
  for (std::size_t k = 0; k < sys.parameter_count; ++k)
    if (!values.contains(k)) names.push_back(sys.parameter_name(k));
  ParametricSystem out;
  out.name = sys.name + " (slice)";
  out.ring = Ring::make(names);
  out.unknown_count = sys.unknown_count;
  out.parameter_count = sys.parameter_count - values.size();
  out.probability_count = sys.probability_count;
  out.homogeneous = false;
  std::vector<std::optional<Polynomial>> images(sys.ring->size());
  for (std::size_t i = 0; i < sys.unknown_count; ++i) images[i] = Polynomial::variable(out.ring, i);
  for (std::size_t k = 0, next = sys.unknown_count; k < sys.parameter_count; ++k) {
    auto it = values.find(k);
    images[sys.parameter(k)] =
        it != values.end() ? Polynomial(out.ring, it->second) : Polynomial::variable(out.ring, next++);
  }
  for (const auto& f : sys.equations) out.equations.push_back(substitute(f, images, out.ring));
  out.jacobian = substitute(sys.jacobian, images, out.ring);
  return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> y) {
  const std::size_t n = m.size();
  // Scale each row to integers, then eliminate fraction-free.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Integer den = y[i].get_den();
    for (const auto& q : m[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j] * den).get_num();
    a[i][n] = Rational(y[i] * den).get_num();
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot: the nonzero entry of smallest magnitude keeps the entries short.
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r)
      if (a[r][k] != 0 && (best == n || abs(a[r][k]) < abs(a[best][k]))) best = r;
    if (best == n) return std::nullopt;
    std::swap(a[k], a[best]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) s -= Rational(a[i][j]) * x[j];
    x[i] = s / Rational(a[i][i]);
    x[i].canonicalize();
  }
  return x;
}

}  // namespace ddisc
