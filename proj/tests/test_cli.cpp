#include "doctest.h"
#include "test_util.hpp"

#include "zx/cli/app.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zx;
using namespace zx::test;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> const& args) {
  std::ostringstream out, err;
  int const code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  args.push_back("--deterministic");
  auto const r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("eval-f prints the closed form") {
  auto const j = run_json({"eval-f", "--x", "3/2"});
  CHECK(j["command"] == "eval-f");
  CHECK(j["value"].get<std::string>().rfind("-0.04398373395828597946", 0) == 0);
  CHECK(j["at_jump"] == false);

  auto const two = run_json({"eval-f", "--x", "2"});
  CHECK(two["at_jump"] == true);
  CHECK(two.contains("left_limit"));

  auto const below = run_json({"eval-f", "--x", "1/2"});
  CHECK(below["side"] == "0<x<1");
  CHECK(below["at_jump"] == true);
}

TEST_CASE("decimals need --inexact") {
  CHECK(run({"eval-f", "--x", "1.5"}).code == cli::kInputError);
  auto const r = run({"eval-f", "--x", "1.5", "--inexact", "--json", "--deterministic"});
  REQUIRE(r.code == 0);
  auto const j = Json::parse(r.out);
  CHECK(j["x"] == "3/2");
  CHECK(j["value"].get<std::string>().rfind("-0.04398373395828597946", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"eval-f", "--x", "2", "--bogus"}).code == cli::kInputError);
  CHECK(run({"eval-f"}).code == cli::kInputError);
  CHECK(run({"eval-f", "--x", "1"}).code == cli::kDomainError);
  CHECK(run({"verify", "--identity", "ingham", "--x", "2"}).code == cli::kDomainError);
  CHECK(run({"verify", "--identity", "nope", "--x", "2"}).code == cli::kInputError);
  CHECK(run({"verify", "--identity", "ingham", "--x", "1/2", "--zeros", "/nonexistent/zeros.txt"}).code ==
        cli::kInputError);
  CHECK(run({"find-zeros", "--lo", "2", "--hi", "3/2"}).code == cli::kDomainError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify reports an EvalReport") {
  auto const j = run_json({"verify", "--identity", "von-mangoldt", "--x", "21/2", "--K", "100"});
  CHECK(j["identity"] == "von-mangoldt");
  CHECK(j["terms_used"] == 100);
  CHECK(j["table"]["label"] == "zeta");
  for (auto const* key : {"lhs", "rhs", "residual"}) CHECK(j[key].contains("re"));
  CHECK(hr(j["abs_residual"].get<std::string>().c_str()) < HReal(0.01));
  CHECK(j["trend"]["decreasing"] == true);

  auto const s = run_json({"verify", "--identity", "S", "--x", "4", "--K", "100"});
  CHECK(s["within_tail_bound"] == true);

  auto const g = run_json({"verify", "--identity", "general", "--x", "4", "--pf", "1|1/2", "--K", "100"});
  CHECK(g["pf"] == "1/(t - 1/2)");
}

TEST_CASE("selberg verification with a descriptor file") {
  auto const j = run_json({"verify", "--identity", "selberg", "--x", "4", "--alpha", "1/2", "--descriptor",
                           std::string(ZX_DATA_DIR) + "/chi4.desc", "--zeros", data_path("chi4_zeros_10.txt")});
  CHECK(j["descriptor"] == "4.3");
  CHECK(j["terms_used"] == 10);
  CHECK(run({"verify", "--identity", "selberg", "--x", "4", "--descriptor", std::string(ZX_DATA_DIR) + "/chi4.desc"})
            .code == cli::kInputError);
}

TEST_CASE("json output round-trips") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"eval-f", "--x", "7/3"},
           {"find-zeros", "--lo", "21/20", "--hi", "2"},
           {"stieltjes", "--order", "3"},
           {"rh-check", "--K", "50"}}) {
    auto a = args;
    a.push_back("--json");
    a.push_back("--deterministic");
    auto const r = run(a);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("deterministic runs are byte-identical") {
  std::vector<std::string> const args{"sum", "--kind", "inv-rho-sq", "--K", "100", "--json", "--deterministic"};
  auto const a = run(args);
  auto const b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_s") == std::string::npos);
  auto const timed = run({"sum", "--kind", "inv-rho-sq", "--K", "100", "--json"});
  CHECK(timed.out.find("elapsed_s") != std::string::npos);
}

TEST_CASE("zero file from the environment") {
  auto const path = std::filesystem::temp_directory_path() / "zx_cli_env_zeros.txt";
  {
    std::ofstream f(path);
    f << "# label: zeta\n14.134725141734693790\n21.022039638771554993\n25.010857580145688763\n";
  }
  ::setenv(cli::kZerosEnv, path.c_str(), 1);
  auto const j = run_json({"sum", "--kind", "inv-rho"});
  ::unsetenv(cli::kZerosEnv);
  std::filesystem::remove(path);
  CHECK(j["table"]["entries"] == 3);
  CHECK(j["terms_used"] == 3);

  auto const fallback = run_json({"sum", "--kind", "inv-rho"});
  CHECK(fallback["table"]["entries"] == 100);
}

TEST_CASE("li row carries both routes") {
  auto const j = run_json({"li", "--n", "5"});
  REQUIRE(j["rows"].size() == 1);
  auto const& row = j["rows"][0];
  CHECK(row["n"] == 5);
  CHECK(row["identity"].get<std::string>().rfind("0.575542714461", 0) == 0);
  CHECK(hr(row["gap"].get<std::string>().c_str()) < HReal(5e-3));
  CHECK(run_json({"li", "--n", "3", "--all"})["rows"].size() == 3);
}

TEST_CASE("csv and human output") {
  auto const csv = run({"stieltjes", "--order", "2", "--format", "csv", "--deterministic"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("n,gamma,gamma_error,eta,lambda,S1,S2,coffey_bounds_ok\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

  auto const human = run({"eval-f", "--x", "3/2", "--deterministic"});
  CHECK(human.out.find("value") != std::string::npos);
  CHECK(human.out.find('{') == std::string::npos);
}

TEST_CASE("chowla-selberg report") {
  auto const j = run_json({"chowla-selberg", "--d", "1", "7"});
  REQUIRE(j["rows"].size() == 2);
  for (auto const& row : j["rows"]) {
    CHECK(hr(row["rel_error"].get<std::string>().c_str()) < HReal(1e-6));
    CHECK(row["class_numbers_agree"] == true);
  }
  auto const t = run_json({"chowla-selberg", "--d", "1", "--theorem", "--max-denominator", "100"});
  CHECK(t["rows"][0]["theorem"]["rational_zero_found"] == false);
  CHECK(t["rows"][0]["theorem"]["L1_prime_sign"] == 1);
}

TEST_CASE("precision flag") {
  auto const j = run_json({"eval-f", "--x", "3/2", "--precision", "128"});
  CHECK(j["precision_bits"] == 128);
  CHECK(j["value"].get<std::string>().size() < 45);
}
