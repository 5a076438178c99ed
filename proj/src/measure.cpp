#include "dimdist/measure.hpp"

#include "dimdist/error.hpp"

namespace dimdist {

DiscreteMeasure DiscreteMeasure::make(std::vector<Point> atoms, std::vector<double> weights) {
  if (atoms.size() != weights.size())
    throw InvalidParameter("measure atoms/weights length mismatch");
  check_same_space(atoms);
  DiscreteMeasure nu;
  nu.atoms = std::move(atoms);
  nu.weights = std::move(weights);
  double total = 0.0;
  for (double w : nu.weights) {
    if (w < 0.0) throw InvalidParameter("measure weights must be nonnegative");
    total += w;
  }
  nu.total_mass = total;
  return nu;
}

double DiscreteMeasure::ball_mass(const Point& center, double r) const {
  double m = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (distance(atoms[i], center) < r) m += weights[i];
  return m;
}

DiscreteMeasure push_forward(const DiscreteMeasure& nu,
                             const std::function<Point(const Point&)>& f) {
  DiscreteMeasure out;
  out.atoms.reserve(nu.atoms.size());
  for (const auto& a : nu.atoms) out.atoms.push_back(f(a));
  out.weights = nu.weights;
  out.total_mass = nu.total_mass;
  return out;
}

}  // namespace dimdist
