#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uasplan/grid.hpp"

namespace uasplan {

struct GridIndex {
  int x = 0, y = 0, z = 0;

  bool operator==(const GridIndex&) const = default;
};

enum class Heuristic { euclidean, manhattan };
enum class PlannerKind { three_d, layered_2d };

const char* to_string(Heuristic h);
const char* to_string(PlannerKind p);
Heuristic heuristic_from_string(const std::string& s);
PlannerKind planner_from_string(const std::string& s);

/// A grid route plus its metric length: the sum of Euclidean distances
/// between consecutive cell centers.
struct Route {
  std::vector<GridIndex> waypoints;
  double length_m = 0.0;
  PlannerKind planner = PlannerKind::three_d;
  Heuristic heuristic = Heuristic::euclidean;
};

struct SearchStats {
  std::uint64_t expanded_nodes = 0;
  double wall_time_ms = 0.0;
  std::uint64_t open_list_peak = 0;
};

/// NoPath is not an error: route is empty when the open list exhausts.
struct SearchResult {
  std::optional<Route> route;
  SearchStats stats;
};

/// Thrown when a query endpoint is unusable; the two conditions are distinct.
class PlanError : public std::invalid_argument {
 public:
  enum class Code { start_occupied, goal_occupied };
  PlanError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Straight-line distance between cell centers in meters, using the grid's
// anisotropic cell sizes. Admissible and consistent for 26-connected moves.
double heuristic_euclidean(const GridIndex& a, const GridIndex& b, const OccupancyGrid& grid);

// Per-axis distance sum. Overestimates under diagonal movement, so routes
// found with it are not guaranteed shortest; searches run faster.
double heuristic_manhattan(const GridIndex& a, const GridIndex& b, const OccupancyGrid& grid);

// 3D A* over 26-connected free cells. With the Euclidean heuristic the
// returned length is the true shortest-path length. Diagonal moves are legal
// only when every cell reached by zeroing one non-zero component of the step
// is free (no corner cutting). Open list is a lazy-deletion binary heap with
// deterministic tie-breaking: lower f, then lower h, then earlier insertion.
SearchResult astar_3d(const OccupancyGrid& grid, const GridIndex& start, const GridIndex& goal,
                      Heuristic heuristic);

// Layered planner: for each layer z whose vertical corridors above start and
// goal are entirely free, plans an 8-connected 2D route within the layer plus
// the two vertical legs, and returns the shortest candidate. Vertical legs
// cost |dz| * cell_size_z. Stats aggregate all per-layer searches.
SearchResult astar_layered_2d(const OccupancyGrid& grid, const GridIndex& start,
                              const GridIndex& goal, Heuristic heuristic);

// Exact shortest 26-connected route by Euclidean edge weights. Kept
// independent of the A* implementation; used for verification and the CLI
// debug path.
SearchResult dijkstra_oracle(const OccupancyGrid& grid, const GridIndex& start,
                             const GridIndex& goal);

// Cell centers in meters: ((x+0.5)*sxy, (y+0.5)*sxy, z*sz).
std::vector<std::array<double, 3>> route_to_waypoints_m(const Route& route,
                                                        const OccupancyGrid& grid);

// Route file writers (JSON per the interface contract; CSV of metric
// waypoints for plotting).
std::string route_to_json(const Route& route, const SearchStats& stats, const OccupancyGrid& grid);
std::string route_to_csv(const Route& route, const OccupancyGrid& grid);

}  // namespace uasplan
