#ifndef DIMDIST_FROSTMAN_HPP
#define DIMDIST_FROSTMAN_HPP

#include <vector>

#include "dimdist/measure.hpp"
#include "dimdist/net.hpp"

namespace dimdist {

struct FrostmanResult {
  DiscreteMeasure measure;      // supported on the input sample
  double audited_C = 0.0;       // smallest C with nu(B(x,r)) <= C r^s over audited balls
  bool degenerate = false;      // total mass collapsed (e.g. single atom, s > 0)
  std::vector<Net> nets;        // the nested hierarchy used, scales 2^-1..2^-depth
};

/// Concrete mass-distribution form of Frostman's lemma on a finite sample:
/// nested nets at scales 2^-k define cells (nearest-center assignment);
/// mass is split top-down proportionally to child sub-sample counts and
/// capped at (2^-k)^s per cell. The finest cell mass is spread equally over
/// the cell's sample points. The audit sweeps balls across the hierarchy's
/// scale range and reports the smallest working constant.
FrostmanResult frostman_measure(const std::vector<Point>& sample, double s, int depth);

/// Depth chosen so 2^-depth is below the sample resolution (capped at 24).
FrostmanResult frostman_measure(const std::vector<Point>& sample, double s);

}  // namespace dimdist

#endif
