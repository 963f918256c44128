#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ddisc/cli.hpp"
#include "support.hpp"

using namespace ddisc;
using namespace ddisc::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json", "--no-timing"});
  auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("equations") {
  auto r = run({"equations", model_path("example1_linear.model")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("F5 = p0+p1+p2+p3-1") != std::string::npos);
  CHECK(r.out.find("jacobian: ") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"equations", model_path("missing.model")}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"discriminant", model_path("example2_toy.sys"), "--method", "magic"}).code == kExitUsage);
  CHECK(run({"discriminant", model_path("example2_toy.sys"), "--pivot", "u9"}).code == kExitUsage);
  auto arity = run({"classify", model_path("example1_linear.model"), "--data", "1,2"});
  CHECK(arity.code == kExitUsage);
  CHECK(arity.err.find("4 values") != std::string::npos);
  auto bad = temp_file("ddisc_bad.model", "n = 1\ninvariant: p0^2+p1\n");
  CHECK(run({"equations", bad.string()}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("discriminant JSON") {
  auto j = run_json({"discriminant", model_path("example2_toy.sys"), "--strategy", "2", "--pivot", "u1"});
  CHECK(j["polynomial"] == "u1^2-4*u0*u2");
  CHECK(j["method"] == "interpolation-s2");
  CHECK(j["total_degree"] == 2);
  CHECK(j["per_variable_degrees"] == nlohmann::json::array({1, 2, 1}));
  CHECK(j["seed"] == 42);
  CHECK(j["wall_time_ms"] == 0);
  CHECK(j["warnings"].empty());

  auto p = run_json({"discriminant", model_path("example1_linear.model"), "--part", "p"});
  CHECK(p["polynomial"] == "u0*u1*u2*u3");
  auto one = run_json({"discriminant", model_path("constant_one.sys"), "--method", "elim"});
  CHECK(one["polynomial"] == "1");
}

TEST_CASE("seed precedence") {
  ::setenv("DD_SEED", "99", 1);
  CHECK(run_json({"ml-degree", model_path("example1_linear.model")})["seed"] == 99);
  CHECK(run_json({"--seed", "5", "ml-degree", model_path("example1_linear.model")})["seed"] == 5);
  ::setenv("DD_SEED", "abc", 1);
  CHECK(run({"ml-degree", model_path("example1_linear.model")}).code == kExitUsage);
  ::unsetenv("DD_SEED");
  CHECK(run_json({"ml-degree", model_path("example1_linear.model")})["seed"] == 42);
}

TEST_CASE("ml-degree failures exit with 3") {
  auto path = temp_file("ddisc_free.sys", "unknowns = p, q\nparameters = a\nequation: p*q-a\nequation: 2*p*q-2*a\n");
  CHECK(run({"ml-degree", path.string()}).code == kExitMLDegree);
}

TEST_CASE("resource limits exit with 4 and keep the metadata") {
  auto r = run({"--format", "json", "--max-pairs", "1", "discriminant", model_path("example1_linear.model"),
                "--method", "elim"});
  CHECK(r.code == kExitResourceLimit);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["model"] == "linear");
  CHECK(j["method"] == "elimination");
  CHECK(j.contains("error"));
}

TEST_CASE("classify and census") {
  auto c = run_json({"classify", model_path("example1_linear.model"), "--data", "51,18,73,25"});
  CHECK(c["real_count"] == 3);
  CHECK(c["positive_count"] == 1);
  CHECK(c["dxj_sign"] == "+");

  auto dxj = temp_file("ddisc_dxj.txt", kExample1Quartic);
  auto n = run_json({"classify", model_path("example1_linear.model"), "--data", "1,-2,3,1", "--dxj-file", dxj.string()});
  CHECK(n["real_count"] == 1);
  CHECK(n["dxj_sign"] == "-");

  auto census = run_json({"census", model_path("example1_linear.model"), "--trials", "10", "--dxj-file", dxj.string()});
  CHECK(census["failures"] == 0);
  REQUIRE(census["classes"].is_array());
  CHECK_FALSE(census["classes"].empty());
}

TEST_CASE("output file and determinism") {
  auto path = std::filesystem::temp_directory_path() / "ddisc_out.json";
  std::vector<std::string> args{"--format", "json", "--no-timing", "--output", path.string(),
                                "discriminant", model_path("example2_toy.sys")};
  auto r = run(args);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  CHECK(nlohmann::json::parse(first.str())["polynomial"] == "u1^2-4*u0*u2");

  auto a = run({"--format", "json", "--no-timing", "--jobs", "1", "discriminant", model_path("example1_linear.model")});
  auto b = run({"--format", "json", "--no-timing", "--jobs", "8", "discriminant", model_path("example1_linear.model")});
  CHECK(a.out == b.out);
}
