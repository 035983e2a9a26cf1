#include "uasplan/raster.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace uasplan {

namespace {

// Token scanner over the PGM header. Whitespace separates tokens; a '#'
// starts a comment that runs to end of line and counts as whitespace.
struct HeaderScanner {
  const std::vector<std::uint8_t>& bytes;
  std::size_t pos = 0;

  void skip_separators() {
    while (pos < bytes.size()) {
      std::uint8_t c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal token; `what` names it in error messages.
  long next_uint(const char* what) {
    skip_separators();
    std::size_t token_start = pos;
    long value = 0;
    bool any = false;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1000000000L) throw PgmParseError(std::string(what) + " out of range", token_start);
      ++pos;
      any = true;
    }
    if (!any) throw PgmParseError(std::string("expected ") + what, token_start);
    return value;
  }
};

}  // namespace

GrayscaleLayer parse_pgm(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2'))
    throw PgmParseError("malformed magic, expected P5 or P2", 0);
  const bool binary = bytes[1] == '5';

  HeaderScanner scan{bytes, 2};
  std::size_t width_at = (scan.skip_separators(), scan.pos);
  long width = scan.next_uint("width");
  std::size_t height_at = (scan.skip_separators(), scan.pos);
  long height = scan.next_uint("height");
  if (width == 0) throw PgmParseError("zero width", width_at);
  if (height == 0) throw PgmParseError("zero height", height_at);

  std::size_t maxval_at = (scan.skip_separators(), scan.pos);
  long maxval = scan.next_uint("maxval");
  if (maxval > 255) throw PgmParseError("maxval > 255 unsupported", maxval_at);
  if (maxval != 255) throw PgmParseError("maxval must be 255", maxval_at);

  GrayscaleLayer layer;
  layer.width = static_cast<int>(width);
  layer.height = static_cast<int>(height);
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  layer.pixels.reserve(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raw payload.
    if (scan.pos >= bytes.size() || !std::isspace(bytes[scan.pos]))
      throw PgmParseError("missing whitespace before pixel data", scan.pos);
    std::size_t data_start = scan.pos + 1;
    if (bytes.size() - data_start < count)
      throw PgmParseError("truncated pixel data", bytes.size());
    layer.pixels.assign(bytes.begin() + data_start, bytes.begin() + data_start + count);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      scan.skip_separators();
      if (scan.pos >= bytes.size()) throw PgmParseError("truncated pixel data", bytes.size());
      std::size_t sample_at = scan.pos;
      long v = scan.next_uint("pixel sample");
      if (v > maxval) throw PgmParseError("pixel sample exceeds maxval", sample_at);
      layer.pixels.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return layer;
}

std::vector<std::uint8_t> serialize_pgm(const GrayscaleLayer& layer) {
  std::string header = "P5\n" + std::to_string(layer.width) + " " + std::to_string(layer.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), layer.pixels.begin(), layer.pixels.end());
  return out;
}

GrayscaleLayer read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open PGM file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_pgm(bytes);
}

void write_pgm_file(const std::string& path, const GrayscaleLayer& layer) {
  auto bytes = serialize_pgm(layer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write PGM file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_layer_sidecar(const std::string& path, const std::vector<LayerSetEntry>& entries) {
  nlohmann::json doc;
  doc["layers"] = nlohmann::json::array();
  for (const auto& e : entries) {
    doc["layers"].push_back({{"file", e.file}, {"altitude_m", e.altitude_m}, {"resolution_m", e.resolution_m}});
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write sidecar: " + path);
  out << doc.dump(2) << "\n";
}

std::vector<LayerSetEntry> read_layer_sidecar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sidecar: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<LayerSetEntry> entries;
  for (const auto& item : doc.at("layers")) {
    LayerSetEntry e;
    e.file = item.at("file").get<std::string>();
    e.altitude_m = item.at("altitude_m").get<double>();
    e.resolution_m = item.at("resolution_m").get<double>();
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<GrayscaleLayer> load_layer_set(const std::string& sidecar_path) {
  const auto entries = read_layer_sidecar(sidecar_path);
  const auto base = std::filesystem::path(sidecar_path).parent_path();
  std::vector<GrayscaleLayer> layers;
  layers.reserve(entries.size());
  for (const auto& e : entries) {
    GrayscaleLayer layer = read_pgm_file((base / e.file).string());
    layer.altitude_m = e.altitude_m;
    layer.resolution_m = e.resolution_m;
    layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace uasplan
