#ifndef DIMDIST_QUOTIENT_HPP
#define DIMDIST_QUOTIENT_HPP

#include "dimdist/grushin.hpp"
#include "dimdist/point.hpp"

namespace dimdist {

/// Distance between right cosets V*a1 and V*a2 of the horizontal line V in
/// H^1, computed as the 1-D minimum over representatives, side by side with
/// the two-sided Grushin estimate of the same pair in (u,v) = (y,tau)
/// coordinates.
struct QuotientDistance {
  double value = 0.0;
  double minimizer = 0.0;  // representative offset achieving the minimum
  bool coarse = false;     // refinement did not converge; grid value reported
  GrushinBracket bracket;  // Grushin two-sided estimate for (y1,t1),(y2,t2)
};

/// Cosets are parameterized by a = (0, y, tau); the leaf through a is
/// {(x, y, tau - 2 x y)}. The minimization anchors the first coset at the
/// representative with x = anchor_x and searches over representatives of
/// the second; the result is independent of the anchor (the cosets are
/// parallel), which the search verifies only up to its tolerance.
QuotientDistance coset_quotient_distance(const Point& a1, const Point& a2,
                                         double anchor_x = 0.0, double C1 = 3.0);

}  // namespace dimdist

#endif
