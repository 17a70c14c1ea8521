// End-to-end checks of the command-line tool: golden output bytes,
// schemas, and the documented exit codes (0 ok, 1 disagreement/verify
// failure, 2 bad input).

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>

#ifndef ICGPST_CLI_PATH
#error "ICGPST_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(ICGPST_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("spectrum subcommand") {
  const RunResult json = run_cli("spectrum 4 --divisors 1");
  CHECK(json.exit_code == 0);
  CHECK(json.output == "{\"n\":4,\"divisors\":[1],\"values\":[2,0,-2,0]}\n");

  const RunResult bigger = run_cli("spectrum 8 --divisors 1,4");
  CHECK(bigger.exit_code == 0);
  CHECK(bigger.output ==
        "{\"n\":8,\"divisors\":[1,4],\"values\":[5,-1,1,-1,-3,-1,1,-1]}\n");

  const RunResult csv = run_cli("spectrum 4 --divisors 1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "j,lambda\n0,2\n1,0\n2,-2\n3,0\n");

  const RunResult bad = run_cli("spectrum 8 --divisors 3");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("3 does not divide 8") != std::string::npos);
}

TEST_CASE("check subcommand") {
  const RunResult hit = run_cli("check 24 --divisors 1,2,3,4,8,12");
  CHECK(hit.exit_code == 0);
  const auto doc = nlohmann::json::parse(hit.output);
  CHECK(doc["n"] == 24);
  CHECK(doc["has_pst"] == true);
  CHECK(doc["pqcd"] == 1);
  CHECK(doc["m"] == 1);
  CHECK(doc["connected"] == true);
  CHECK(doc["degree"] == 21);
  CHECK(doc["agreement"] == true);
  CHECK(std::abs(doc["tau"].get<double>() - 1.5707963267948966) < 1e-15);
  CHECK_FALSE(doc.contains("spectrum"));

  const RunResult miss = run_cli("check 4 --divisors 1,2");
  CHECK(miss.exit_code == 0);
  const auto miss_doc = nlohmann::json::parse(miss.output);
  CHECK(miss_doc["has_pst"] == false);
  CHECK(miss_doc["tau"].is_null());
  CHECK(miss_doc["pqcd"].is_null());

  const RunResult with_spec = run_cli("check 4 --divisors 1 --include-spectrum");
  const auto spec_doc = nlohmann::json::parse(with_spec.output);
  CHECK(spec_doc["spectrum"] == nlohmann::json::array({2, 0, -2, 0}));

  const RunResult odd = run_cli("check 6 --divisors 1");
  CHECK(odd.exit_code == 0);
  CHECK(nlohmann::json::parse(odd.output)["has_pst"] == false);

  // disjoint-edge graph: physical routes and characterization split
  const RunResult split = run_cli("check 6 --divisors 3");
  CHECK(split.exit_code == 1);
  const auto split_doc = nlohmann::json::parse(split.output);
  CHECK(split_doc["agreement"] == false);
  CHECK(split_doc["spectral"] == true);
  CHECK(split_doc["structural"] == false);
  CHECK(split_doc["numeric"] == true);
}

TEST_CASE("check divisor parsing") {
  const RunResult dup = run_cli("check 8 --divisors 1,1,4");
  CHECK(dup.exit_code == 0);
  CHECK(dup.output.find("warning: duplicate divisor 1") != std::string::npos);

  const RunResult strict = run_cli("check 8 --divisors 1,1,4 --strict");
  CHECK(strict.exit_code == 2);
  CHECK(strict.output.find("duplicate divisor 1") != std::string::npos);

  const RunResult spaced = run_cli("check 8 --divisors \"1, 4\"");
  CHECK(spaced.exit_code == 0);

  const RunResult junk = run_cli("check 8 --divisors 1,x");
  CHECK(junk.exit_code == 2);
}

TEST_CASE("enumerate subcommand") {
  const RunResult eight = run_cli("enumerate 8");
  CHECK(eight.exit_code == 0);
  const auto doc = nlohmann::json::parse(eight.output);
  CHECK(doc["count"] == 4);
  REQUIRE(doc["sets"].size() == 4);
  CHECK(doc["sets"][0]["divisors"] == nlohmann::json::array({2}));
  CHECK(doc["sets"][1]["divisors"] == nlohmann::json::array({4}));
  CHECK(doc["sets"][2]["divisors"] == nlohmann::json::array({1, 2}));
  CHECK(doc["sets"][3]["divisors"] == nlohmann::json::array({1, 4}));

  const RunResult connected = run_cli("enumerate 8 --connected-only");
  CHECK(nlohmann::json::parse(connected.output)["count"] == 2);

  const RunResult empty = run_cli("enumerate 10");
  CHECK(nlohmann::json::parse(empty.output)["count"] == 0);

  const RunResult csv = run_cli("enumerate 8 --format csv");
  CHECK(csv.output.rfind("divisors,connected,degree,pqcd,m,tau\n", 0) == 0);
  CHECK(csv.output.find("1;2,true,6,2,1,1.57079632679") != std::string::npos);
}

TEST_CASE("count subcommand") {
  const RunResult table = run_cli("count 4 8");
  CHECK(table.exit_code == 0);
  const auto doc = nlohmann::json::parse(table.output);
  REQUIRE(doc.size() == 5);
  CHECK(doc[0]["n"] == 4);
  CHECK(doc[0]["setbased"] == 2);
  CHECK(doc[0]["printed"] == 2);
  CHECK(doc[0]["bruteforce_all"] == 2);
  CHECK(doc[0]["printed_deviates"] == false);
  CHECK(doc[4]["n"] == 8);
  CHECK(doc[4]["setbased"] == 4);
  CHECK(doc[4]["printed"] == 2);
  CHECK(doc[4]["bruteforce_all"] == 4);
  CHECK(doc[4]["bruteforce_connected"] == 2);
  CHECK(doc[4]["printed_deviates"] == true);
  CHECK(doc[4]["setbased_matches_bruteforce"] == true);

  const RunResult row24 = run_cli("count 24 24");
  const auto doc24 = nlohmann::json::parse(row24.output);
  CHECK(doc24[0]["setbased"] == 16);
  CHECK(doc24[0]["printed"] == 16);
  CHECK(doc24[0]["bruteforce_all"] == 16);

  const RunResult csv = run_cli("count 4 6 --format csv");
  CHECK(csv.output.rfind("n,setbased,printed,bruteforce_all,bruteforce_connected,"
                         "printed_deviates,setbased_matches_bruteforce\n",
                         0) == 0);
}

TEST_CASE("fidelity subcommand") {
  const RunResult csv = run_cli("fidelity 4 --divisors 1 --pair 2,0 --t-max 6.2832 --steps 5 "
                                "--format csv");
  CHECK(csv.exit_code == 0);
  REQUIRE(csv.output.rfind("t,re,im,abs\n", 0) == 0);
  // magnitudes 0, 1, 0, 1, 0 along the grid
  std::vector<double> mags;
  size_t pos = csv.output.find('\n') + 1;
  while (pos < csv.output.size()) {
    const size_t end = csv.output.find('\n', pos);
    const std::string line = csv.output.substr(pos, end - pos);
    mags.push_back(std::stod(line.substr(line.rfind(',') + 1)));
    pos = end + 1;
  }
  REQUIRE(mags.size() == 5);
  const std::vector<double> expected{0.0, 1.0, 0.0, 1.0, 0.0};
  for (size_t i = 0; i < 5; ++i) CHECK(std::abs(mags[i] - expected[i]) < 1e-4);

  const RunResult json = run_cli("fidelity 8 --divisors 1,4 --steps 3");
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["a"] == 4);  // default pair (n/2, 0)
  CHECK(doc["b"] == 0);
  CHECK(doc["t"].size() == 3);
  CHECK(doc["re"].size() == 3);
  CHECK(doc["im"].size() == 3);
  CHECK(doc["abs"].size() == 3);

  const RunResult odd_default = run_cli("fidelity 9 --divisors 1");
  CHECK(odd_default.exit_code == 2);
}

TEST_CASE("verify subcommand smoke run") {
  const RunResult small = run_cli("verify --max-n 8");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("[PASS] ramanujan-dual-evaluation") != std::string::npos);
  CHECK(small.output.find("[FAIL]") == std::string::npos);
  CHECK(small.output.find("suites passed") != std::string::npos);

  const RunResult injected = run_cli("verify --max-n 4 --inject-fault");
  CHECK(injected.exit_code == 1);
  CHECK(injected.output.find("[FAIL] ramanujan-dual-evaluation") != std::string::npos);
  CHECK(injected.output.find("witness: c(3,7)") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("spectrum --divisors 1").exit_code == 2);  // missing n
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("spectrum 4 --divisors 1 --format xml").exit_code == 2);
  CHECK(run_cli("count 9 4").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
