#ifndef DIMDIST_NET_HPP
#define DIMDIST_NET_HPP

#include <cstddef>
#include <vector>

#include "dimdist/point.hpp"

namespace dimdist {

/// A maximal eps-separated representative set. Centers are pairwise at
/// distance >= epsilon and every input sample point lies within
/// covering_radius <= epsilon of some center. `parent_prefix` counts the
/// leading centers inherited from a coarser seed net, so nested hierarchies
/// X_1 subset X_2 subset ... are prefixes of one another.
struct Net {
  double epsilon = 0.0;
  std::vector<Point> centers;
  double covering_radius = 0.0;
  std::size_t parent_prefix = 0;
};

/// Greedy scan in input order: a point becomes a center iff it is at
/// distance >= eps from every center found so far. Deterministic for a
/// fixed input order. When `seed` is given its centers are kept verbatim
/// and extended (they must be eps-separated at the new scale, which holds
/// whenever seed.epsilon >= eps).
Net maximal_separated_net(const std::vector<Point>& points, double eps,
                          const Net* seed = nullptr);

struct CoverResult {
  std::size_t count = 0;
  std::vector<Ball> balls;
};

/// Cover of the sample by balls of radius r centered at the points of a
/// maximal r-separated net; maximality makes the balls cover the sample.
CoverResult greedy_cover_count(const std::vector<Point>& points, double r);

/// Open-ball membership: the sample points at distance < r from center.
std::vector<Point> ball_members(const std::vector<Point>& points,
                                const Point& center, double r);

}  // namespace dimdist

#endif
