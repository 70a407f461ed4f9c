#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nullforge/cli.hpp"

using namespace nullforge;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int count_prefix(const std::string& s, char prefix) {
  int n = 0;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] == prefix) ++n;
  return n;
}

}  // namespace

TEST_CASE("verify subcommand") {
  CHECK(run_command({"verify", "--example", "alpha2", "--p", "2", "--q", "1"}) ==
        kExitOk);
  CHECK(run_command({"verify", "--example", "f5"}) == kExitOk);
}

TEST_CASE("constraint violations exit with usage code") {
  CHECK(run_command({"curve", "--example", "alpha1", "--p", "1", "--q", "1",
                     "--r", "1", "--s", "1"}) == kExitUsage);
}

TEST_CASE("unknown flags and subcommands exit with usage code") {
  CHECK(run_command({"frobnicate"}) == kExitUsage);
  CHECK(run_command({"curve", "--bogus"}) == kExitUsage);
  CHECK(run_command({}) == kExitUsage);
}

TEST_CASE("degenerate data exits with the numerical code") {
  CHECK(run_command({"curve", "--signature", "e42", "--P11", "exp(x)", "--P12",
                     "1", "--P21", "exp(x)", "--P22", "exp(x)"}) ==
        kExitNumericalDegeneracy);
}

TEST_CASE("surface OBJ export has the stated mesh counts") {
  std::string path = "test_cli_f4.obj";
  CHECK(run_command({"surface", "--example", "f4", "--grid", "50x50", "--out",
                     path}) == kExitOk);
  std::string obj = slurp(path);
  CHECK(count_prefix(obj, 'v') == 2500);
  CHECK(count_prefix(obj, 'f') == 4802);

  // determinism: identical invocation, identical bytes
  std::string path2 = "test_cli_f4_again.obj";
  CHECK(run_command({"surface", "--example", "f4", "--grid", "50x50", "--out",
                     path2}) == kExitOk);
  CHECK(slurp(path2) == obj);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("curve CSV export") {
  std::string path = "test_cli_a5.csv";
  CHECK(run_command({"curve", "--example", "alpha5", "--interval", "0:1",
                     "--samples", "3", "--out", path}) == kExitOk);
  std::string csv = slurp(path);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);
  std::remove(path.c_str());
}

TEST_CASE("roundtrip subcommand") {
  CHECK(run_command({"roundtrip", "--example", "alpha2"}) == kExitOk);
  CHECK(run_command({"roundtrip", "--example", "alpha2", "--k", "2+sin(x)"}) ==
        kExitOk);
  CHECK(run_command({"roundtrip", "--example", "alpha2", "--alternative",
                     "--interval", "0.3:1.2"}) == kExitOk);
  CHECK(run_command({"roundtrip", "--example", "alpha5", "--interval",
                     "0.1:1.2", "--tol", "1e-6"}) == kExitOk);
}

TEST_CASE("examples subcommand") {
  CHECK(run_command({"examples"}) == kExitOk);
}

TEST_CASE("config file with flag overrides") {
  std::string cfg_path = "test_cli_config.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"kind":"curve","example":"alpha5","interval":"0:1","samples":5,"format":"csv"})";
  }
  std::string out = "test_cli_cfg.csv";
  CHECK(run_command({"curve", "--config", cfg_path, "--out", out}) == kExitOk);
  std::string csv = slurp(out);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 6);  // header + 5 samples from the config

  // --samples overrides the config value
  CHECK(run_command({"curve", "--config", cfg_path, "--samples", "3", "--out",
                     out}) == kExitOk);
  csv = slurp(out);
  lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);
  std::remove(cfg_path.c_str());
  std::remove(out.c_str());
}

TEST_CASE("json surface export from DSL config") {
  std::string cfg_path = "test_cli_surface.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"json({
      "gamma1": {"signature": "e31", "P12": "sin(2*x)", "P21": "cos(x)", "P22": "sin(x)"},
      "gamma2": {"example": "alpha5_tilde"},
      "grid": "4x4", "interval": "0.2:0.7", "interval2": "0.2:0.7",
      "format": "json"
    })json";
  }
  std::string out = "test_cli_surface_out.json";
  CHECK(run_command({"surface", "--config", cfg_path, "--out", out}) == kExitOk);
  std::string body = slurp(out);
  CHECK(body.find("\"kind\": \"surface\"") != std::string::npos);
  std::remove(cfg_path.c_str());
  std::remove(out.c_str());
}
