#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vizing/json_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(VIZING_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(VIZING_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("find-cert reproduces the walkthrough matrix as JSON") {
  const RunResult r = run("find-cert --d 5 --fix F_1_1=6 --fix F_2_2=3 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = viz::json::parse(r.out);
  CHECK(j["d"] == 5);
  CHECK(j["F"][0] == viz::json::array({"6", "-4", "59/40"}));
  CHECK(j["F"][1] == viz::json::array({"-4", "3", "-5/4"}));
  CHECK(j["F"][2] == viz::json::array({"59/40", "-5/4", "3/5"}));
  CHECK(j["version"] == 1);
  CHECK(viz::dump_canonical(j) == r.out);  // machine output is canonical
}

TEST_CASE("the equation-system wire schema") {
  const viz::FSystem fs = viz::build_f_system(5);
  const viz::json j = viz::fsystem_to_json(fs);
  CHECK(j["d"] == 5);
  REQUIRE(j["equations"].size() == 4);
  CHECK(j["equations"][3]["k"] == 5);
  CHECK(j["equations"][3]["lhs_sign"] == -1);
  CHECK(j["equations"][3]["terms"] ==
        viz::json::array({viz::json{{"i", 2}, {"j", 3}, {"coeff", 20}},
                          viz::json{{"i", 3}, {"j", 3}, {"coeff", 30}}}));
}

TEST_CASE("verify accepts the shipped d=5 fixture with brute-force splits") {
  const RunResult r = run("verify --file " + fixture("cert_d5.json") + " --brute 3 3 --brute 4 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("verify fails with the failing check named on a tampered file") {
  const auto j = viz::read_json_file(fixture("cert_d5.json"));
  auto bad = j;
  bad["F"][2][2] = "2/3";
  const std::string tmp = "/tmp/viz_tampered_cert.json";
  viz::write_json_file(tmp, bad);
  const RunResult r = run("verify --file " + tmp);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("[FAIL] equations") != std::string::npos);
  CHECK(r.out.find("k=5") != std::string::npos);
}

TEST_CASE("certificate JSON round-trips byte-identically") {
  for (const char* name : {"cert_d5.json", "cert_d6.json", "cert_d7.json", "cert_d8.json"}) {
    const std::string text = slurp(fixture(name));
    const auto parsed = viz::json::parse(text);
    CHECK(viz::dump_canonical(parsed) == text);
    // and through the typed layer as well
    const auto cert = viz::certificate_from_json(parsed);
    CHECK(viz::dump_canonical(viz::certificate_to_json(cert)) == text);
  }
}

TEST_CASE("gb oracle reports IDENTICAL at (2,2)") {
  const RunResult r = run("gb --ng 2 --nh 2 --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("IDENTICAL") != std::string::npos);
}

TEST_CASE("generators lists the (2,2) system") {
  const RunResult r = run("generators --ng 2 --nh 2 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = viz::json::parse(r.out);
  CHECK(j["count"] == 12);
}

TEST_CASE("sdp-pipeline labels its verdicts as numerical evidence") {
  const RunResult r = run("sdp-pipeline --ng 2 --nh 2 --ell 1 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = viz::json::parse(r.out);
  CHECK(j["verdict"] == "LikelyInfeasible");
  CHECK(j["tier"] == "numerical evidence");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("find-cert").exit_code == 2);           // missing --d
  CHECK(run("find-cert --d 2").exit_code == 2);     // unsupported d
  CHECK(run("nonsense").exit_code != 0);
  CHECK(run("verify --file /nonexistent.json").exit_code == 2);
}

TEST_CASE("brute-check runs a single split") {
  const RunResult r = run("brute-check --file " + fixture("cert_d5.json") +
                          " --ng 4 --nh 2 --anchor 1 1 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = viz::json::parse(r.out);
  CHECK(j["verdict"]["all_pass"] == true);
}

TEST_CASE("no-solution searches exit with code 3") {
  const RunResult r = run("find-cert --d 4 --fix F_1_1=7");
  CHECK(r.exit_code == 3);
}
