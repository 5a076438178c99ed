#include "dimdist/coverability.hpp"

#include <cmath>

#include "dimdist/error.hpp"

namespace dimdist {

EvenCoverReport even_coverability_audit(const std::vector<Point>& points, double t_dim,
                                        double sigma, double eps) {
  if (!(eps > 0.0)) throw InvalidParameter("even coverability eps must be positive");
  if (!(sigma >= 1.0)) throw InvalidParameter("even coverability sigma must be >= 1");
  Net net = maximal_separated_net(points, eps);

  EvenCoverReport rep;
  rep.cover.reserve(net.centers.size());
  for (const auto& c : net.centers) rep.cover.push_back(Ball{c, eps});
  rep.sup_radius = eps;
  rep.sum_r_t = double(net.centers.size()) * std::pow(eps, t_dim);

  for (const auto& p : points) {
    std::size_t overlap = 0;
    for (const auto& c : net.centers)
      if (distance(p, c) < sigma * eps) ++overlap;
    rep.max_overlap = std::max(rep.max_overlap, overlap);
  }
  return rep;
}

}  // namespace dimdist
