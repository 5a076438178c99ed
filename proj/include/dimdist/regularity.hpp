#ifndef DIMDIST_REGULARITY_HPP
#define DIMDIST_REGULARITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dimdist/foliation.hpp"
#include "dimdist/point.hpp"

namespace dimdist {

struct RegularityRow {
  double r = 0.0;
  std::size_t N = 0;        // worst-case cover count over parameter centers
  double normalized = 0.0;  // N * r^s
};

/// Covering-count table behind the local regularity definition: for each r,
/// the preimage of a parameter ball of radius r (intersected with a fixed
/// compact K) is covered by ambient balls of radius r, and N(r) * r^s
/// should stay within a bounded window when the chart is s-regular.
struct RegularityTable {
  ChartKind chart = ChartKind::HeisRight;
  double s = 0.0;
  std::string K_id;
  std::vector<RegularityRow> rows;

  /// max / min of the normalized column; the bounded-window statistic.
  double window_ratio() const;
};

struct RegularityConfig {
  // Compact K for Heisenberg charts: coordinate box with these halfwidths.
  double x_halfwidth = 0.25;
  double y_halfwidth = 0.125;
  double t_halfwidth = 1.0 / 64.0;
  // Target sample points per ambient r-ball inside each slab (Monte Carlo
  // density for the Heisenberg slabs, grid density elsewhere).
  double density_factor = 12.0;
  // Worst case is taken over at most this many parameter-ball centers.
  int max_param_centers = 3;
  // Explicit parameter centers (chart coordinates); defaults per chart
  // when empty.
  std::vector<std::vector<double>> param_centers;
  int carpet_depth = 4;
  std::uint64_t seed = 2026;
};

RegularityTable ds_regularity_table(const FoliationChart& chart, double s,
                                    const std::vector<double>& r_grid,
                                    const RegularityConfig& cfg = {});

/// CSV layout: r, N, N_r_pow_s, chart, s, K_id.
void write_regularity_csv(const std::string& path, const RegularityTable& table);

}  // namespace dimdist

#endif
