#ifndef DIMDIST_BOXDIM_HPP
#define DIMDIST_BOXDIM_HPP

#include <vector>

#include "dimdist/point.hpp"

namespace dimdist {

/// Box-counting proxy for Hausdorff dimension: least-squares slope of
/// log N(r) against log(1/r). N(r) counts occupied anchored coordinate
/// boxes where the mesh is metrically faithful (Euclidean, carpet) and
/// greedy metric-ball covers elsewhere (Heisenberg, Grushin). The two
/// dimension notions can differ in general, so every report labels this
/// estimate a box proxy.
struct DimensionEstimate {
  double value = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  double slope_residual = 0.0;  // rms regression residual; +inf when degenerate
  std::size_t point_count = 0;
  bool degenerate = false;
  std::vector<double> scales;
  std::vector<std::size_t> counts;
};

DimensionEstimate box_dimension(const std::vector<Point>& points,
                                const std::vector<double>& r_grid);

/// Geometric grid over [resolution*4, diameter/4] with `n_scales` scales.
std::vector<double> default_scale_grid(const std::vector<Point>& points,
                                       int n_scales = 6);

DimensionEstimate box_dimension(const std::vector<Point>& points);

}  // namespace dimdist

#endif
