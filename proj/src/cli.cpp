#include "ddisc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ddisc/realclass.hpp"
#include "ddisc/text.hpp"

namespace ddisc {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  int time_budget_s = 600;
  std::size_t max_pairs = 200000;
  std::string format = "text";
  std::string output;
  bool no_timing = false;
};

struct CommandArgs {
  std::string model;
  std::string part = "J";
  std::string method = "interp";
  int strategy = 1;
  std::string pivot;
  std::string data;
  std::string dxj_file;
  std::size_t trials = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string sign_text(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

Json rationals(std::span<const Rational> values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

std::vector<Rational> parse_data(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const SyntaxError& e) {
      throw UsageError("bad --data entry '" + item + "': " + e.what());
    }
  }
  return out;
}

class Runner {
 public:
  Runner(RunConfig config, CommandArgs args) : config_(std::move(config)), args_(std::move(args)) {
    start_ = Clock::now();
    limits_.max_pairs = config_.max_pairs;
    limits_.max_time = std::chrono::seconds(config_.time_budget_s);
    limits_.deadline = start_ + limits_.max_time;
  }

  Json& doc() { return doc_; }

  void load() {
    try {
      sys_ = load_system(args_.model);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    } catch (const NonHomogeneousInvariant& e) {
      throw UsageError(e.what());
    } catch (const VariableOutOfRange& e) {
      throw UsageError(e.what());
    }
    doc_["model"] = sys_.name;
  }

  void equations() {
    load();
    Json eqs = Json::array();
    for (const auto& f : sys_.equations) eqs.push_back(to_string(f));
    Json unknowns = Json::array(), params = Json::array();
    for (auto i : sys_.unknowns()) unknowns.push_back(sys_.ring->name(i));
    for (std::size_t k = 0; k < sys_.parameter_count; ++k) params.push_back(sys_.parameter_name(k));
    doc_["unknowns"] = unknowns;
    doc_["parameters"] = params;
    doc_["equations"] = eqs;
    doc_["jacobian"] = to_string(sys_.jacobian);
  }

  void ml_degree_cmd() {
    load();
    doc_["seed"] = config_.seed;
    MLDegreeResult r;
    try {
      r = ml_degree(sys_, config_.seed, args_.trials, limits_);
    } catch (const NotZeroDimensional& e) {
      ml_failure_ = true;
      throw;
    }
    doc_["ml_degree"] = r.value;
    doc_["agreed"] = r.agreed;
    Json trials = Json::array();
    for (const auto& t : r.trials) {
      Json data = Json::array();
      for (const auto& v : t.data) data.push_back(v.get_str());
      trials.push_back(Json{{"data", data}, {"count", t.count}});
    }
    doc_["trials"] = trials;
    if (!r.agreed) ml_failure_ = true;
  }

  void discriminant_cmd() {
    load();
    if (args_.part == "p") {
      doc_["part"] = "p";
      doc_["polynomial"] = to_string(normalize_integer_primitive(map_to_ring(dx_p(sys_), parameter_ring(sys_))));
      return;
    }
    doc_["part"] = "J";
    auto out = compute_dxj();
    doc_["total_degree"] = out.degrees.total;
    doc_["per_variable_degrees"] = out.degrees.per_variable;
    Json shear = Json::array();
    for (const auto& a : out.shear.coefficients) shear.push_back(a.get_si());
    doc_["shear"] = shear;
    doc_["samples"] = out.samples;
    doc_["retries"] = out.retries;
    doc_["warnings"] = out.warnings;
    doc_["polynomial"] = to_string(out.polynomial);
  }

  void classify_cmd() {
    load();
    auto data = parse_data(args_.data);
    if (data.size() != sys_.parameter_count)
      throw UsageError("--data needs " + std::to_string(sys_.parameter_count) + " values, got " +
                       std::to_string(data.size()));
    doc_["seed"] = config_.seed;
    auto dxj = discriminant_for_classification();
    auto r = classify_at(sys_, data, dxj, config_.seed, limits_);
    doc_["data"] = rationals(r.data);
    doc_["solutions"] = r.solutions;
    doc_["real_count"] = r.real_count;
    doc_["positive_count"] = r.positive_count;
    doc_["dxj_sign"] = sign_text(r.dxj_sign.value_or(0));
    doc_["dxp_zero"] = r.dxp_zero;
    doc_["separating_form"] = r.shape_variable;
  }

  void census_cmd() {
    load();
    doc_["seed"] = config_.seed;
    doc_["trials"] = args_.trials;
    auto dxj = discriminant_for_classification();
    auto c = component_census(sys_, dxj, args_.trials, config_.seed, config_.jobs, limits_);
    Json entries = Json::array();
    for (const auto& e : c.entries)
      entries.push_back(Json{{"dxj_sign", sign_text(e.dxj_sign)},
                             {"real_count", e.real_count},
                             {"positive_count", e.positive_count},
                             {"multiplicity", e.multiplicity}});
    doc_["classes"] = entries;
    doc_["failures"] = c.failures;
  }

  bool ml_failure() const { return ml_failure_; }

  void finish() {
    doc_["wall_time_ms"] =
        config_.no_timing
            ? 0
            : std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

 private:
  DiscriminantOutput compute_dxj() {
    if (args_.method == "elim") {
      doc_["method"] = method_name(Method::Elimination);
      doc_["strategy"] = nullptr;
      doc_["seed"] = config_.seed;
      auto out = dxj_elimination(sys_, limits_);
      out.seed = config_.seed;
      return out;
    }
    DiscriminantOptions options;
    options.seed = config_.seed;
    options.strategy = args_.strategy == 2 ? Strategy::S2 : Strategy::S1;
    options.jobs = config_.jobs;
    options.limits = limits_;
    options.pivot = 0;
    if (!args_.pivot.empty()) {
      auto idx = parameter_ring(sys_)->index_of(args_.pivot);
      if (!idx) throw UsageError("--pivot " + args_.pivot + " is not a parameter of " + sys_.name);
      options.pivot = *idx;
    }
    doc_["method"] = method_name(options.strategy == Strategy::S1 ? Method::InterpolationS1 : Method::InterpolationS2);
    doc_["strategy"] = args_.strategy;
    doc_["seed"] = config_.seed;
    doc_["pivot"] = sys_.parameter_name(options.pivot);
    return dxj_interpolate(sys_, options);
  }

  Polynomial discriminant_for_classification() {
    if (args_.dxj_file.empty()) {
      auto out = compute_dxj();
      doc_["dxj"] = to_string(out.polynomial);
      return out.polynomial;
    }
    std::ifstream in(args_.dxj_file);
    if (!in) throw UsageError("cannot open " + args_.dxj_file);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      auto p = parse_polynomial(ss.str(), parameter_ring(sys_));
      doc_["dxj"] = to_string(p);
      return p;
    } catch (const Error& e) {
      throw UsageError(args_.dxj_file + ": " + e.what());
    }
  }

  RunConfig config_;
  CommandArgs args_;
  ParametricSystem sys_;
  GroebnerLimits limits_;
  Clock::time_point start_;
  Json doc_ = Json::object();
  bool ml_failure_ = false;
};

std::string render_text(const Json& doc) {
  std::ostringstream os;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      // Rows share their keys; print them as a table.
      os << key << ":\n";
      for (const auto& [k, v] : value.front().items()) os << "  " << std::left << std::setw(16) << k;
      os << "\n";
      for (const auto& row : value) {
        for (const auto& [k, v] : row.items())
          os << "  " << std::left << std::setw(16) << (v.is_string() ? v.get<std::string>() : v.dump());
        os << "\n";
      }
    } else if (value.is_array() && key == "equations") {
      for (std::size_t i = 0; i < value.size(); ++i) os << "F" << i << " = " << value[i].get<std::string>() << "\n";
    } else {
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CommandArgs cmd;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::uint64_t> seed_flag;

  CLI::App app{"Data-discriminants of likelihood equations", "ddisc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", seed_flag, "random seed (default 42, or DD_SEED)");
  app.add_option("--jobs", config.jobs, "parallel sampling threads")->check(CLI::PositiveNumber);
  app.add_option("--time-budget", config.time_budget_s, "seconds before giving up")->check(CLI::PositiveNumber);
  app.add_option("--max-pairs", config.max_pairs, "S-pair limit per Groebner basis")->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", config.output, "write the result to this file");
  app.add_flag("--no-timing", config.no_timing, "report wall_time_ms as 0");

  auto model_arg = [&](CLI::App* sub) { sub->add_option("model", cmd.model, "model or .sys file")->required(); };
  auto dxj_args = [&](CLI::App* sub) {
    sub->add_option("--method", cmd.method, "elim or interp")->check(CLI::IsMember({"elim", "interp"}));
    sub->add_option("--strategy", cmd.strategy, "1 (at once) or 2 (step by step)")->check(CLI::IsMember({1, 2}));
    sub->add_option("--pivot", cmd.pivot, "distinguished parameter (default: the first)");
  };

  auto* equations = app.add_subcommand("equations", "print the likelihood equations and J");
  model_arg(equations);
  auto* mldeg = app.add_subcommand("ml-degree", "number of complex critical points");
  model_arg(mldeg);
  cmd.trials = 2;
  mldeg->add_option("--trials", cmd.trials, "independent random data vectors")->check(CLI::PositiveNumber);
  auto* disc = app.add_subcommand("discriminant", "DX_J or DX_p");
  model_arg(disc);
  disc->add_option("--part", cmd.part, "J or p")->check(CLI::IsMember({"J", "p"}));
  dxj_args(disc);
  auto* classify = app.add_subcommand("classify", "real and positive critical points at one data vector");
  model_arg(classify);
  classify->add_option("--data", cmd.data, "comma-separated rationals")->required();
  classify->add_option("--dxj-file", cmd.dxj_file, "file holding DX_J (computed when absent)");
  dxj_args(classify);
  auto* census = app.add_subcommand("census", "classify random positive data vectors");
  model_arg(census);
  std::size_t census_trials = 50;
  census->add_option("--trials", census_trials, "number of data vectors");
  census->add_option("--dxj-file", cmd.dxj_file, "file holding DX_J (computed when absent)");
  dxj_args(census);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ddisc: " << e.what() << "\n";
    return kExitUsage;
  }
  if (census->parsed()) cmd.trials = census_trials;

  if (seed_flag) {
    config.seed = *seed_flag;
  } else if (const char* env = std::getenv("DD_SEED")) {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "ddisc: DD_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  Runner runner(config, cmd);
  int code = kExitOk;
  try {
    if (equations->parsed()) runner.equations();
    else if (mldeg->parsed()) runner.ml_degree_cmd();
    else if (disc->parsed()) runner.discriminant_cmd();
    else if (classify->parsed()) runner.classify_cmd();
    else runner.census_cmd();
    if (runner.ml_failure()) {
      err << "ddisc: ML-degree trials disagree\n";
      code = kExitMLDegree;
    }
  } catch (const UsageError& e) {
    err << "ddisc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    runner.doc()["error"] = e.what();
    code = kExitResourceLimit;
  } catch (const UnluckyRandomness& e) {
    runner.doc()["error"] = e.what();
    code = kExitUnlucky;
  } catch (const NotShapePosition& e) {
    runner.doc()["error"] = e.what();
    code = kExitNotShapePosition;
  } catch (const std::exception& e) {
    runner.doc()["error"] = e.what();
    code = mldeg->parsed() ? kExitMLDegree : kExitFailure;
  }
  if (code != kExitOk && runner.doc().contains("error"))
    err << "ddisc: " << runner.doc()["error"].get<std::string>() << "\n";
  runner.finish();

  std::string text = config.format == "json" ? runner.doc().dump(2) + "\n" : render_text(runner.doc());
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "ddisc: cannot write " << config.output << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace ddisc
