#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() { return testsupport::env_or("ALEXOBS_CLI", "build/tools/alexobs"); }
std::string corpus_dir() { return testsupport::env_or("ALEXOBS_CORPUS", "corpus"); }

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("text report ends with the forced conclusions") {
  const RunResult r =
      run_cli(corpus_dir() + "/trifold_sing_line.json --format text");
  CHECK(r.exit_code == 0);
  const auto tail = r.out.find("conclusions:");
  REQUIRE(tail != std::string::npos);
  const std::string conclusions = r.out.substr(tail);
  CHECK(conclusions.find("δ_2 ∼ 1 (forced)") != std::string::npos);
  CHECK(conclusions.find("δ_3 ∼ 1 (forced)") != std::string::npos);
  CHECK(conclusions.find("δ_0 ∼ t - 1") != std::string::npos);
}

TEST_CASE("structured output is valid JSON and deterministic") {
  const std::string args =
      corpus_dir() + "/cubic_surface_point.json --format structured";
  const RunResult first = run_cli(args);
  CHECK(first.exit_code == 0);
  const RunResult second = run_cli(args);
  CHECK(first.out == second.out);

  const nlohmann::json doc = nlohmann::json::parse(first.out);
  CHECK(doc.at("schema") == "alexobs-report-v1");
  CHECK(doc.at("n") == 2);
  CHECK(doc.at("degrees").size() == 3);
  CHECK(doc.at("degrees").at(2).at("forced_value") ==
        nlohmann::json::parse("[[0,1,1]]"));
  bool cites_45 = false;
  for (const auto& bound : doc.at("degrees").at(2).at("divisor_bounds")) {
    if (bound.at("citation") == "Theorem 4.5") cites_45 = true;
  }
  CHECK(cites_45);
}

TEST_CASE("verify mode accepts the degree-d cyclotomic claim") {
  const RunResult r = run_cli(corpus_dir() +
                              "/surface_deg3_point.json --mode verify "
                              "--claim '2:{\"cyclo\":{\"3\":1}}'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ACCEPTED") != std::string::npos);
}

TEST_CASE("verify mode rejects claims citing the violated rule") {
  const RunResult r = run_cli(corpus_dir() +
                              "/surface_deg3_point.json --mode verify "
                              "--claim '2:[[0,1,1],[1,-1,1],[2,1,1]]'");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("REJECTED") != std::string::npos);
  CHECK(r.out.find("Theorem 4.1") != std::string::npos);
}

TEST_CASE("parse and usage failures exit 1") {
  CHECK(run_cli("no_such_file.json").exit_code == 1);

  char tmpl[] = "/tmp/alexobs_badXXXXXX";
  const int fd = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  {
    std::ofstream bad(tmpl);
    bad << "{ not json";
  }
  close(fd);
  const RunResult r = run_cli(std::string(tmpl) + " --format text");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("parse error") != std::string::npos);
  std::remove(tmpl);

  CHECK(run_cli(corpus_dir() + "/trifold_sing_line.json --mode verify").exit_code == 1);
  CHECK(run_cli(corpus_dir() +
                "/trifold_sing_line.json --claim '1:[[0,1,1]]'").exit_code == 1);
}

TEST_CASE("arrangement mode runs from the command line") {
  // Assemble a small cone spec on the fly.
  char tmpl[] = "/tmp/alexobs_arrXXXXXX";
  const int fd = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  {
    std::ofstream out(tmpl);
    out << R"({
      "n": 1, "d": 2,
      "components": [{"name": "L1", "degree": 1}, {"name": "L2", "degree": 1}],
      "strata": [
        {"name": "topL1", "dim": 1, "components": ["L1"], "link": {"type": "smooth"}},
        {"name": "topL2", "dim": 1, "components": ["L2"], "link": {"type": "smooth"}},
        {"name": "vertex", "dim": 0, "components": ["L1", "L2"], "link": {"type": "cone_point"}}
      ],
      "flags": {},
      "chi_milnor_fiber": 0
    })";
  }
  close(fd);
  const RunResult r = run_cli(std::string(tmpl) + " --mode arrangement");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("P_1 ∼ t - 1 (forced)") != std::string::npos);
  // Cone points are rejected outside arrangement mode.
  const RunResult wrong_mode = run_cli(std::string(tmpl));
  CHECK(wrong_mode.exit_code == 1);
  std::remove(tmpl);
}
