#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uasplan/raster.hpp"

namespace uasplan {

// Grayscale values >= this threshold are free space.
inline constexpr int kFreeThreshold = 254;

/// How a grid was produced; carried through inflation and coarsening and
/// written into the grid file.
struct GridProvenance {
  int threshold = kFreeThreshold;
  double margin_m = 0.0;
  int coarsen_factor = 1;
  std::vector<std::string> source_layers;
  std::vector<double> layer_altitudes_m;

  bool operator==(const GridProvenance&) const = default;
};

/// 3D node grid. occupied[x + nx*(y + ny*z)] is true for restricted cells
/// (the 0/1 matrix encoding: occupied = 1, free = 0). Cells are
/// cell_size_xy x cell_size_xy meters in plan and cell_size_z meters apart
/// vertically; layer z sits at altitude z * cell_size_z.
struct OccupancyGrid {
  int nx = 0, ny = 0, nz = 0;
  double cell_size_xy = 1.0;
  double cell_size_z = 1.0;
  std::vector<std::uint8_t> occupied;  // x-fastest
  GridProvenance provenance;

  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * (static_cast<std::size_t>(y) + static_cast<std::size_t>(ny) * z);
  }
  bool in_bounds(int x, int y, int z) const {
    return x >= 0 && x < nx && y >= 0 && y < ny && z >= 0 && z < nz;
  }
  bool is_occupied(int x, int y, int z) const { return occupied[index(x, y, z)] != 0; }
  bool is_free(int x, int y, int z) const { return occupied[index(x, y, z)] == 0; }
  void set_occupied(int x, int y, int z, bool v = true) { occupied[index(x, y, z)] = v ? 1 : 0; }

  bool operator==(const OccupancyGrid&) const = default;
};

/// Named regulatory lateral clearance.
struct MarginPreset {
  std::string name;
  double margin_m = 0.0;
  std::string source;
};

// Bundled regulatory distances (lateral clearance to buildings/people).
const std::vector<MarginPreset>& margin_presets();

// Looks a preset up by name; nullopt when unknown.
std::optional<MarginPreset> find_margin_preset(const std::string& name);

// Stacks layers into a 3D grid: a cell is free iff its pixel value >= 254.
// All layers must share dimensions and resolution, and altitudes must be
// strictly increasing with uniform spacing (the spacing becomes cell_size_z;
// a single layer gets cell_size_z = 1). Throws std::invalid_argument
// otherwise.
OccupancyGrid threshold_layers(const std::vector<GrayscaleLayer>& layers);

// Marks every cell whose center lies within margin_m (Euclidean, measured in
// the horizontal plane of the same layer) of an occupied cell center as
// occupied. margin 0 returns the input unchanged apart from provenance.
OccupancyGrid inflate(const OccupancyGrid& grid, double margin_m);

// Reduces horizontal resolution by an integer factor: an output cell is
// occupied iff any of the factor x factor input cells under it is occupied.
// z is untouched. factor must divide nx and ny exactly; no padding.
OccupancyGrid coarsen(const OccupancyGrid& grid, int factor);

// Grid file: one JSON document with the header fields plus the occupancy as
// run-length-encoded [value, count] pairs over x-fastest order.
void save_grid(const std::string& path, const OccupancyGrid& grid);
OccupancyGrid load_grid(const std::string& path);

std::string grid_to_json(const OccupancyGrid& grid);
OccupancyGrid grid_from_json(const std::string& text);

}  // namespace uasplan
