#pragma once

#include <string>
#include <utility>
#include <vector>

namespace uasplan {

/// Paired measurements under two conditions, same order.
struct PairedSample {
  std::vector<std::pair<double, double>> pairs;
};

struct WilcoxonResult {
  double w_statistic = 0.0;  // min of the signed-rank sums
  int n_effective = 0;       // pairs left after zero-difference removal
  double p_value = 1.0;      // two-sided
  std::string method;        // "exact" or "normal-approx"
};

// Two-sided Wilcoxon signed-rank test on d = a - b. Zero differences are
// dropped; |d| is ranked with midranks for ties. For n_effective <= 25 the
// p-value is exact over all 2^n sign assignments (p = 2 * P(W+ <= w),
// capped at 1); above that a normal approximation with continuity and tie
// correction is used. Throws std::domain_error when every difference is zero
// (the test is undefined).
WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample);

// Reads a two-column CSV of paired measurements. '#' lines and a non-numeric
// header row are skipped.
PairedSample read_paired_csv(const std::string& path);

std::string wilcoxon_to_json(const WilcoxonResult& r);

}  // namespace uasplan
