#ifndef DIMDIST_COVERABILITY_HPP
#define DIMDIST_COVERABILITY_HPP

#include <vector>

#include "dimdist/net.hpp"
#include "dimdist/point.hpp"

namespace dimdist {

/// Finite-sample audit of sigma-even coverability: the cover is the
/// maximal eps-separated net with balls of radius eps, and the report
/// carries the three quantities of the definition: the sup radius, the
/// sum of r_k^t, and the max overlap of the sigma-dilated balls over the
/// sample.
struct EvenCoverReport {
  std::vector<Ball> cover;
  double sup_radius = 0.0;
  double sum_r_t = 0.0;
  std::size_t max_overlap = 0;
};

EvenCoverReport even_coverability_audit(const std::vector<Point>& points, double t_dim,
                                        double sigma, double eps);

}  // namespace dimdist

#endif
