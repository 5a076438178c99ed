#ifndef DIMDIST_MEASURE_HPP
#define DIMDIST_MEASURE_HPP

#include <functional>
#include <vector>

#include "dimdist/point.hpp"

namespace dimdist {

/// Weighted point set approximating a Radon measure. Weights are
/// nonnegative and total_mass tracks their sum.
struct DiscreteMeasure {
  std::vector<Point> atoms;
  std::vector<double> weights;
  double total_mass = 0.0;

  static DiscreteMeasure make(std::vector<Point> atoms, std::vector<double> weights);

  /// Mass of the open ball B(center, r), by direct summation.
  double ball_mass(const Point& center, double r) const;

  std::size_t size() const { return atoms.size(); }
};

/// Push-forward f#nu: atoms map through f, weights carry over unchanged,
/// so total mass is conserved exactly.
DiscreteMeasure push_forward(const DiscreteMeasure& nu,
                             const std::function<Point(const Point&)>& f);

}  // namespace dimdist

#endif
