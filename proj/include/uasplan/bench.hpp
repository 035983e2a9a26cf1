#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uasplan/planner.hpp"
#include "uasplan/stats.hpp"

namespace uasplan {

enum class GridVariant { fine, coarse };

const char* to_string(GridVariant v);

/// One planner invocation to measure.
struct BenchCase {
  GridIndex start;
  GridIndex goal;
  PlannerKind planner = PlannerKind::three_d;
  Heuristic heuristic = Heuristic::euclidean;
  GridVariant variant = GridVariant::coarse;
};

/// Measurement of one case: median wall time over `repetitions` serial runs.
/// error is set (and the numeric fields meaningless) when the case failed.
struct BenchRecord {
  BenchCase bench_case;
  double length_m = 0.0;
  double time_ms_median = 0.0;
  std::uint64_t expanded_nodes = 0;
  int repetitions = 0;
  bool no_path = false;
  std::string error;  // empty on success
  bool timing_spread_warning = false;

  bool ok() const { return error.empty() && !no_path; }
};

// The 12 start/goal pairs of the reference experiment scaled onto the
// 40x40x8 coarse grid. Start is always the ground corner.
std::vector<std::pair<GridIndex, GridIndex>> default_case_pairs();

// Maps a coarse-grid index to the center cell of its fine-grid block.
GridIndex coarse_to_fine(const GridIndex& c, int factor);

// Default matrix: every planner/heuristic combination on the coarse grid,
// plus the layered-2D Euclidean runs on the fine grid for the
// map-representation comparison.
std::vector<BenchCase> default_case_matrix(int coarsen_factor);

// Runs every case `repetitions` times serially on the calling thread and
// reports the median wall time. Route lengths must be identical across
// repetitions (planner determinism); a violation is reported as a failed row.
// Planner errors become failed rows rather than aborting the matrix.
std::vector<BenchRecord> run_matrix(const OccupancyGrid& grid_fine,
                                    const OccupancyGrid& grid_coarse,
                                    const std::vector<BenchCase>& cases, int repetitions);

// start,goal,planner,heuristic,variant,length_m,time_ms_median,expanded_nodes,repetitions
std::string records_to_csv(const std::vector<BenchRecord>& records);

/// One paired comparison (condition a vs condition b over the same cases).
struct Comparison {
  std::string name;
  std::string a_label;
  std::string b_label;
  int n_pairs = 0;
  double mean_length_ratio = 1.0;   // mean of a/b
  double mean_time_ratio = 1.0;     // mean of a/b
  double median_time_ratio = 1.0;   // median of a/b
  std::optional<WilcoxonResult> wilcoxon;  // on wall times; empty when no difference
  std::string note;  // e.g. "no difference" when all time differences are zero
};

struct BenchSummary {
  std::vector<Comparison> comparisons;
  std::vector<std::string> failed_cases;
};

// Pairs records by (start, goal) per comparison and emits length/time ratios
// plus Wilcoxon p-values on the times. Fine-grid cases are matched to their
// coarse counterparts through coarsen_factor. A record without its partner
// raises std::invalid_argument naming the orphans.
BenchSummary summarize(const std::vector<BenchRecord>& records, int coarsen_factor);

std::string summary_to_json(const BenchSummary& summary);

/// Named paired times extracted from the shipped reference CSVs.
struct FixtureComparison {
  std::string name;
  PairedSample times;
};

// Loads the reference measurement tables (fixture CSVs) and forms the five
// standard paired comparisons their statistics are computed from.
std::vector<FixtureComparison> load_fixture_comparisons(const std::string& fixture_dir);

// Runs the signed-rank test on every fixture comparison; returns JSON.
std::string fixture_stats_json(const std::string& fixture_dir);

}  // namespace uasplan
