#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uasplan {

/// One per-altitude occupancy map: an 8-bit grayscale raster where each
/// pixel covers resolution_m x resolution_m meters of ground at the given
/// flight altitude. White (>= 254) is free space, darker values are occupied.
struct GrayscaleLayer {
  int width = 0;
  int height = 0;
  double resolution_m = 1.0;  // meters per pixel
  double altitude_m = 0.0;
  std::vector<std::uint8_t> pixels;  // row-major, size width*height

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  bool operator==(const GrayscaleLayer&) const = default;
};

/// Thrown on malformed PGM input; offset is the byte position of the defect.
class PgmParseError : public std::runtime_error {
 public:
  PgmParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses a binary (P5) or ASCII (P2) portable graymap. Comment lines starting
// with '#' are allowed anywhere in the header. maxval must be exactly 255;
// other maxvals would silently rescale the free-space threshold and are
// rejected. Trailing bytes after the declared pixel payload are ignored.
// resolution/altitude are not part of PGM; callers attach them afterwards
// (see the layer-set sidecar below).
GrayscaleLayer parse_pgm(const std::vector<std::uint8_t>& bytes);

// Emits binary P5 with maxval 255. Deterministic: identical layers give
// identical bytes.
std::vector<std::uint8_t> serialize_pgm(const GrayscaleLayer& layer);

// File helpers.
GrayscaleLayer read_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const GrayscaleLayer& layer);

/// Entry of the layer-set sidecar: PGM file plus the metadata PGM cannot carry.
struct LayerSetEntry {
  std::string file;
  double altitude_m = 0.0;
  double resolution_m = 1.0;
};

// Sidecar JSON document listing the layers of a map set. Paths in `file` are
// relative to the sidecar's directory.
void write_layer_sidecar(const std::string& path, const std::vector<LayerSetEntry>& entries);
std::vector<LayerSetEntry> read_layer_sidecar(const std::string& path);

// Loads every layer named by the sidecar, attaching altitude and resolution.
// Layers are returned in sidecar order.
std::vector<GrayscaleLayer> load_layer_set(const std::string& sidecar_path);

}  // namespace uasplan
