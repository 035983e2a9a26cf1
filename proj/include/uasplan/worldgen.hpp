#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "uasplan/raster.hpp"

namespace uasplan {

/// Parameters of the synthetic urban world: a regular grid of courts filled
/// with buildings of random height, the central court reserved for take-off
/// and landing. All distances in meters.
struct WorldSpec {
  std::uint64_t seed = 1;
  int court_count = 3;  // courts per axis
  double central_footprint_w = 15.0;  // central-court buildings
  double central_footprint_d = 15.0;
  double outer_footprint_w = 20.0;  // surrounding-court buildings
  double outer_footprint_d = 15.0;
  double height_min = 10.0;
  double height_max = 120.0;
  double street_width = 10.0;
  double border_m = 36.0;  // clear periphery around the court block
  double extent_x = 200.0;
  double extent_y = 200.0;
  // Ground positions reserved for take-off/landing; default: world center.
  std::vector<std::array<double, 2>> landing_pads = {{100.0, 100.0}};
};

/// Axis-aligned building footprint with a height.
struct Building {
  double x_min = 0, y_min = 0, x_max = 0, y_max = 0;
  double height_m = 0;

  bool operator==(const Building&) const = default;
};

struct WorldGeometry {
  std::vector<Building> buildings;
  std::vector<std::array<double, 2>> landing_pads;

  bool operator==(const WorldGeometry&) const = default;
};

// Name of the random generator family, recorded in world.json so worlds can
// be reproduced across platforms.
inline constexpr const char* kWorldRngAlgorithm = "mt19937_64";

// Deterministically generates the world for a spec: building positions follow
// a fixed court layout, heights are drawn uniformly from
// [height_min, height_max] using a seeded mt19937_64. Buildings that would
// cover a landing pad are dropped. Throws std::invalid_argument when the
// buildings cannot be packed into the extent or the spec is inconsistent.
WorldGeometry generate_world(const WorldSpec& spec);

// Renders one grayscale layer per altitude: a pixel is occupied (value 0)
// iff its square has positive-area overlap with a building strictly taller
// than the altitude, else free (255). Altitudes must be strictly increasing
// and non-negative. extent comes from the spec used to generate the world.
std::vector<GrayscaleLayer> rasterize(const WorldGeometry& world,
                                      double extent_x, double extent_y,
                                      const std::vector<double>& altitudes,
                                      double resolution_m);

// Writes world.json (spec + rng identity + generated geometry), the per-layer
// PGM files and the layer-set sidecar into out_dir. Returns the sidecar path.
std::string write_world_files(const std::string& out_dir, const WorldSpec& spec,
                              const WorldGeometry& world,
                              const std::vector<GrayscaleLayer>& layers);

}  // namespace uasplan
