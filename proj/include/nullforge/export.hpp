#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullforge/pseudo_euclid.hpp"

namespace nullforge {

/// Format a double with 17 significant digits (lossless text round-trip).
std::string format_double(double v);

/// CSV polyline: header "xi,c1,c2,c3[,c4]", one row per sample, 17
/// significant digits, deterministic bytes. Requires >= 2 samples of
/// uniform dimension.
void export_polyline_csv(const std::vector<double>& xis,
                         const std::vector<PEVector>& samples,
                         const std::string& path);
std::string polyline_csv_string(const std::vector<double>& xis,
                                const std::vector<PEVector>& samples);

/// Wavefront OBJ of a grid of surface samples (row-major, at least 2x2):
/// vertices in row-major order, two triangles per cell with consistent
/// winding. 4D samples need project_drop (1-based coordinate to drop);
/// 3D samples are exported directly.
void export_surface_obj(const std::vector<std::vector<PEVector>>& grid,
                        const std::string& path,
                        std::optional<int> project_drop = std::nullopt);
std::string surface_obj_string(const std::vector<std::vector<PEVector>>& grid,
                               std::optional<int> project_drop = std::nullopt);

}  // namespace nullforge
