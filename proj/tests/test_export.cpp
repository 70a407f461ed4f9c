#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "nullforge/catalog.hpp"
#include "nullforge/export.hpp"

using namespace nullforge;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
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

TEST_CASE("format_double round-trips doubles") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    double v = u(rng) * std::pow(10.0, i % 7 - 3);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv polyline") {
  CurveExample a5 = build_curve_example("alpha5");
  std::vector<double> xis = {0.0, 0.5, 1.0};
  std::vector<PEVector> pts;
  for (double xi : xis) pts.push_back(a5.closed_form.position(xi));

  std::string csv = polyline_csv_string(xis, pts);
  CHECK(count_lines(csv) == 4);  // header + 3 rows
  CHECK(csv.substr(0, 12) == "xi,c1,c2,c3\n");

  CHECK(polyline_csv_string(xis, pts) == csv);  // deterministic

  CHECK_THROWS_AS(polyline_csv_string({}, {}), Error);
  CHECK_THROWS_AS(polyline_csv_string({0.0}, {pts[0]}), Error);

  std::vector<PEVector> four = {PEVector::e42(1, 2, 3, 4), PEVector::e42(5, 6, 7, 8)};
  std::string csv4 = polyline_csv_string({0.0, 1.0}, four);
  CHECK(csv4.substr(0, 15) == "xi,c1,c2,c3,c4\n");
}

TEST_CASE("obj surface meshes") {
  auto grid = [](int n, int m) {
    std::vector<std::vector<PEVector>> g(n, std::vector<PEVector>(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) g[i][j] = PEVector::e31(i, j, i * j);
    return g;
  };

  std::string small = surface_obj_string(grid(2, 2));
  CHECK(count_prefix(small, 'v') == 4);
  CHECK(count_prefix(small, 'f') == 2);

  std::string big = surface_obj_string(grid(30, 30));
  CHECK(count_prefix(big, 'v') == 900);
  CHECK(count_prefix(big, 'f') == 1682);
  CHECK(surface_obj_string(grid(30, 30)) == big);  // deterministic

  std::vector<std::vector<PEVector>> g4(2, std::vector<PEVector>(2, PEVector::e42(1, 2, 3, 4)));
  CHECK_THROWS_AS(surface_obj_string(g4), ConfigError);
  std::string projected = surface_obj_string(g4, 4);
  CHECK(count_prefix(projected, 'v') == 4);
  CHECK(projected.find("v 1 2 3\n") != std::string::npos);

  CHECK_THROWS_AS(surface_obj_string(grid(1, 5)), Error);
}

TEST_CASE("file writing") {
  CurveExample a5 = build_curve_example("alpha5");
  std::vector<double> xis = {0.0, 0.5, 1.0};
  std::vector<PEVector> pts;
  for (double xi : xis) pts.push_back(a5.closed_form.position(xi));

  std::string path = "test_export_tmp.csv";
  export_polyline_csv(xis, pts, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == polyline_csv_string(xis, pts));
  std::remove(path.c_str());
}
