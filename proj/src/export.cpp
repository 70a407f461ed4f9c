#include "nullforge/export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nullforge/errors.hpp"

namespace nullforge {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace

std::string polyline_csv_string(const std::vector<double>& xis,
                                const std::vector<PEVector>& samples) {
  if (samples.size() < 2) throw Error("polyline export needs at least 2 samples");
  if (xis.size() != samples.size())
    throw Error("xi list and sample list differ in length");
  int dim = samples.front().dim();
  for (const auto& s : samples)
    if (s.dim() != dim) throw Error("polyline samples have mixed dimensions");

  std::ostringstream os;
  os << "xi,c1,c2,c3";
  if (dim == 4) os << ",c4";
  os << '\n';
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << format_double(xis[i]);
    for (int c = 0; c < dim; ++c) os << ',' << format_double(samples[i][c]);
    os << '\n';
  }
  return os.str();
}

void export_polyline_csv(const std::vector<double>& xis,
                         const std::vector<PEVector>& samples,
                         const std::string& path) {
  write_file(path, polyline_csv_string(xis, samples));
}

std::string surface_obj_string(const std::vector<std::vector<PEVector>>& grid,
                               std::optional<int> project_drop) {
  if (grid.size() < 2 || grid.front().size() < 2)
    throw Error("surface export needs a grid of at least 2x2");
  std::size_t cols = grid.front().size();
  for (const auto& row : grid)
    if (row.size() != cols) throw Error("surface grid rows differ in length");

  int dim = grid.front().front().dim();
  if (dim == 4 && !project_drop)
    throw ConfigError("4D surface export requires an explicit projection "
                      "(--project-drop)");
  if (dim == 3 && project_drop)
    throw ConfigError("projection applies only to 4D surfaces");
  if (project_drop && (*project_drop < 1 || *project_drop > dim))
    throw ConfigError("projection coordinate out of range");

  std::ostringstream os;
  for (const auto& row : grid) {
    for (const auto& v : row) {
      os << 'v';
      for (int c = 0; c < dim; ++c) {
        if (project_drop && c + 1 == *project_drop) continue;
        os << ' ' << format_double(v[c]);
      }
      os << '\n';
    }
  }
  // Two triangles per cell; vertex indices are 1-based, row-major.
  auto idx = [cols](std::size_t i, std::size_t j) {
    return i * cols + j + 1;
  };
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      os << "f " << idx(i, j) << ' ' << idx(i, j + 1) << ' ' << idx(i + 1, j + 1)
         << '\n';
      os << "f " << idx(i, j) << ' ' << idx(i + 1, j + 1) << ' ' << idx(i + 1, j)
         << '\n';
    }
  }
  return os.str();
}

void export_surface_obj(const std::vector<std::vector<PEVector>>& grid,
                        const std::string& path,
                        std::optional<int> project_drop) {
  write_file(path, surface_obj_string(grid, project_drop));
}

}  // namespace nullforge
