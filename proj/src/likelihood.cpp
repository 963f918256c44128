#include "ddisc/likelihood.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "ddisc/random.hpp"
#include "ddisc/text.hpp"

namespace ddisc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Entry {
  std::size_t line;
  std::string key;
  std::string value;
};

std::vector<Entry> read_entries(std::string_view text, const std::string& source) {
  std::vector<Entry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line[0] == '#') continue;
    std::size_t sep = line.find_first_of("=:");
    if (sep == std::string::npos) throw ParseError(source, line_no, "expected 'key = value' or 'key: value'");
    out.push_back({line_no, trim(std::string_view(line).substr(0, sep)), trim(std::string_view(line).substr(sep + 1))});
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Polynomial parse_at(const std::string& text, const RingPtr& ring, const std::string& source, std::size_t line) {
  try {
    return parse_polynomial(text, ring);
  } catch (const SyntaxError& e) {
    throw ParseError(source, line, e.what());
  }
}

int parse_int(const std::string& s, const std::string& source, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      s.size() > 6)
    throw ParseError(source, line, "expected a non-negative integer, got '" + s + "'");
  return std::stoi(s);
}

}  // namespace

StatisticalModel parse_model(std::string_view text, const std::string& source) {
  StatisticalModel model;
  std::optional<int> n;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::string>> invariant_text;
  for (const auto& e : read_entries(text, source)) {
    if (e.key == "name") {
      model.name = e.value;
    } else if (e.key == "n") {
      n = parse_int(e.value, source, e.line);
    } else if (e.key == "variables") {
      names = split_list(e.value);
      for (const auto& v : names)
        if (v.size() < 2 || v[0] != 'p')
          throw ParseError(source, e.line, "probability variable '" + v + "' must be named p<suffix>");
    } else if (e.key == "invariant") {
      invariant_text.emplace_back(e.line, e.value);
    } else {
      throw ParseError(source, e.line, "unknown key '" + e.key + "'");
    }
  }
  if (!n) throw ParseError(source, 0, "missing 'n = ...'");
  if (*n < 1) throw ParseError(source, 0, "n must be at least 1");
  model.n = *n;
  if (names.empty()) {
    for (int i = 0; i <= *n; ++i) names.push_back("p" + std::to_string(i));
  } else if (names.size() != static_cast<std::size_t>(*n + 1)) {
    throw ParseError(source, 0, "expected " + std::to_string(*n + 1) + " variables");
  }
  if (invariant_text.empty()) throw ParseError(source, 0, "a model needs at least one invariant");
  try {
    model.ring = Ring::make(names);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
  static const std::regex indexed("p[0-9]+");
  for (const auto& [line, body] : invariant_text) {
    Polynomial g;
    try {
      g = parse_at(body, model.ring, source, line);
    } catch (const UnknownVariable& e) {
      if (std::regex_match(e.name(), indexed))
        throw VariableOutOfRange(source + ":" + std::to_string(line) + ": variable " + e.name() +
                                 " is outside p0..p" + std::to_string(*n));
      throw ParseError(source, line, e.what());
    }
    if (g.is_zero()) throw ParseError(source, line, "invariant is zero");
    if (!g.is_homogeneous())
      throw NonHomogeneousInvariant(source + ":" + std::to_string(line) + ": invariant " + to_string(g) +
                                    " is not homogeneous");
    model.invariants.push_back(std::move(g));
  }
  return model;
}

StatisticalModel load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path), path.string());
}

std::vector<std::size_t> ParametricSystem::unknowns() const {
  std::vector<std::size_t> v(unknown_count);
  for (std::size_t i = 0; i < unknown_count; ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> ParametricSystem::parameters() const {
  std::vector<std::size_t> v(parameter_count);
  for (std::size_t i = 0; i < parameter_count; ++i) v[i] = unknown_count + i;
  return v;
}

ParametricSystem build_lagrange_system(const StatisticalModel& model) {
  const std::size_t np = model.ring->size();
  const std::size_t s = model.invariants.size();
  std::vector<std::string> names = model.ring->names();
  for (std::size_t j = 1; j <= s + 1; ++j) names.push_back("l" + std::to_string(j));
  for (std::size_t k = 0; k < np; ++k) names.push_back("u" + model.ring->name(k).substr(1));

  ParametricSystem sys;
  sys.name = model.name;
  sys.ring = Ring::make(names);
  sys.unknown_count = np + s + 1;
  sys.parameter_count = np;
  sys.probability_count = np;

  std::vector<Polynomial> g;
  for (const auto& gk : model.invariants) g.push_back(map_to_ring(gk, sys.ring));
  auto var = [&](std::size_t i) { return Polynomial::variable(sys.ring, i); };

  for (std::size_t k = 0; k < np; ++k) {
    Polynomial bracket = var(np);
    for (std::size_t j = 0; j < s; ++j) bracket += g[j].derivative(k) * var(np + 1 + j);
    sys.equations.push_back(var(k) * bracket - var(sys.parameter(k)));
  }
  for (const auto& gj : g) sys.equations.push_back(gj);
  Polynomial simplex(sys.ring, Rational(-1));
  for (std::size_t k = 0; k < np; ++k) simplex += var(k);
  sys.equations.push_back(simplex);
  sys.jacobian = jacobian_determinant(sys);
  return sys;
}

ParametricSystem parse_system(std::string_view text, const std::string& source) {
  ParametricSystem sys;
  std::vector<std::string> unknowns, params;
  std::vector<std::pair<std::size_t, std::string>> eqs;
  std::optional<std::pair<std::size_t, std::string>> jac;
  for (const auto& e : read_entries(text, source)) {
    if (e.key == "name") {
      sys.name = e.value;
    } else if (e.key == "unknowns") {
      unknowns = split_list(e.value);
    } else if (e.key == "parameters") {
      params = split_list(e.value);
    } else if (e.key == "equation") {
      eqs.emplace_back(e.line, e.value);
    } else if (e.key == "jacobian") {
      jac.emplace(e.line, e.value);
    } else if (e.key == "homogeneous") {
      if (e.value != "true" && e.value != "false") throw ParseError(source, e.line, "expected true or false");
      sys.homogeneous = e.value == "true";
    } else {
      throw ParseError(source, e.line, "unknown key '" + e.key + "'");
    }
  }
  if (unknowns.empty()) throw ParseError(source, 0, "missing 'unknowns = ...'");
  if (params.empty()) throw ParseError(source, 0, "missing 'parameters = ...'");
  if (eqs.size() != unknowns.size())
    throw ParseError(source, 0, "expected " + std::to_string(unknowns.size()) + " equations, got " +
                                    std::to_string(eqs.size()));
  std::vector<std::string> names = unknowns;
  names.insert(names.end(), params.begin(), params.end());
  try {
    sys.ring = Ring::make(names);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
  sys.unknown_count = unknowns.size();
  sys.parameter_count = params.size();
  sys.probability_count = unknowns.size();
  auto parse = [&](std::size_t line, const std::string& body) {
    try {
      return parse_at(body, sys.ring, source, line);
    } catch (const UnknownVariable& e) {
      throw ParseError(source, line, e.what());
    }
  };
  for (const auto& [line, body] : eqs) sys.equations.push_back(parse(line, body));
  sys.jacobian = jac ? parse(jac->first, jac->second) : jacobian_determinant(sys);
  return sys;
}

ParametricSystem load_system(const std::filesystem::path& path) {
  if (path.extension() == ".sys") return parse_system(read_file(path), path.string());
  return build_lagrange_system(load_model(path));
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const RingPtr ring = m[0][0].ring();
  bool negate = false;
  Polynomial prev(ring, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ring);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(ring);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial jacobian_determinant(const ParametricSystem& sys) {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& f : sys.equations) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < sys.unknown_count; ++j) row.push_back(f.derivative(j));
    m.push_back(std::move(row));
  }
  return determinant(std::move(m));
}

Polynomial dx_p(const ParametricSystem& sys) {
  Polynomial out(sys.ring, Rational(1));
  for (std::size_t k = 0; k < sys.parameter_count; ++k) out *= Polynomial::variable(sys.ring, sys.parameter(k));
  return out;
}

RingPtr unknown_ring(const ParametricSystem& sys) {
  std::vector<std::string> names(sys.ring->names().begin(),
                                 sys.ring->names().begin() + static_cast<std::ptrdiff_t>(sys.unknown_count));
  return Ring::make(names);
}

std::vector<Polynomial> specialize_parameters(const ParametricSystem& sys, std::span<const Rational> values,
                                              const RingPtr& target) {
  if (values.size() != sys.parameter_count) throw std::invalid_argument("wrong number of parameter values");
  std::vector<std::optional<Polynomial>> images(sys.ring->size());
  for (std::size_t i = 0; i < sys.unknown_count; ++i) images[i] = Polynomial::variable(target, i);
  for (std::size_t k = 0; k < sys.parameter_count; ++k) images[sys.parameter(k)] = Polynomial(target, values[k]);
  std::vector<Polynomial> out;
  for (const auto& f : sys.equations) out.push_back(substitute(f, images, target));
  return out;
}

MLDegreeResult ml_degree(const ParametricSystem& sys, std::uint64_t seed, std::size_t trials,
                         const GroebnerLimits& limits) {
  if (trials < 1) throw std::invalid_argument("ml_degree needs at least one trial");
  MLDegreeResult result;
  auto ring = unknown_ring(sys);
  auto unknowns = sys.unknowns();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed + t, {}));
    std::optional<MLDegreeTrial> done;
    for (int attempt = 0; attempt < 5 && !done; ++attempt) {
      MLDegreeTrial trial;
      std::vector<Rational> values;
      for (std::size_t k = 0; k < sys.parameter_count; ++k) {
        trial.data.push_back(rng.integer(1, 999));
        values.emplace_back(trial.data.back());
      }
      auto eqs = specialize_parameters(sys, values, ring);
      auto basis = buchberger(eqs, MonomialOrder::grevlex(), limits);
      try {
        trial.count = quotient_dimension(basis, unknowns);
      } catch (const NotZeroDimensional&) {
        continue;
      }
      done = std::move(trial);
    }
    if (!done) throw NotZeroDimensional("specialized system is not zero-dimensional after 5 attempts");
    result.trials.push_back(std::move(*done));
  }
  result.value = result.trials[0].count;
  result.agreed = std::all_of(result.trials.begin(), result.trials.end(),
                              [&](const MLDegreeTrial& t) { return t.count == result.value; });
  return result;
}

}  // namespace ddisc
