#pragma once

#include <array>
#include <string>
#include <vector>

#include "fgc/coords.hpp"
#include "fgc/flags.hpp"

namespace fgc {

struct Tile {
  int tri = 0;                    // underlying surface triangle
  std::array<Flag, 3> flags;      // at corners 0, 1, 2 of tri
  std::array<int, 3> neighbor{-1, -1, -1};  // tile across side s
  int depth = 0;
  int parent = -1;
};

struct Tessellation {
  std::vector<Tile> tiles;
  int depth = 0;
};

struct DevelopOptions {
  int max_depth = 6;
  size_t max_bits = 4096;
};

// Breadth-first development from the canonical tile of triangle 0.
// Throws DepthLimitExceeded, PatchOverflow.
Tessellation develop(const CoordVector& c, int depth, const DevelopOptions& opt = {});

// Recomputes every triple ratio and every interior edge ratio.
bool ratio_fidelity(const Tessellation& t, const CoordVector& c);

// Tiles have pairwise disjoint interiors and every frontier edge supports
// the whole union. Throws PatchOverflow if a vertex is not in z > 0.
bool convexity_check(const Tessellation& t);

// Distinct tile vertices.
std::vector<Point> tile_vertices(const Tessellation& t);

// sigma_min / sigma_max of the Veronese matrix of the vertices.
double conic_residual(const Tessellation& t);
double conic_residual_points(const std::vector<Point>& pts);

struct SvgOptions {
  double width = 800, height = 800;
  double stroke_width = 1.0;
  bool flag_lines = false;  // also draw the circumscribed triangles
  std::string fill = "#dbe7f3";
  std::string stroke = "#1f3b57";
};

struct SvgResult {
  std::string svg;
  std::vector<std::string> warnings;
};

SvgResult emit_svg(const Tessellation& t, const SvgOptions& opt = {});

}  // namespace fgc
