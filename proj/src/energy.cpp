#include "dimdist/energy.hpp"

#include <cmath>
#include <limits>

#include "dimdist/error.hpp"

namespace dimdist {

double t_energy(const DiscreteMeasure& nu, double t) {
  if (t < 0.0) throw InvalidParameter("t-energy exponent must be >= 0");
  if (nu.size() < 2) throw InvalidParameter("t-energy needs at least 2 atoms");

  double sum = 0.0;
  double comp = 0.0;  // Kahan
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = i + 1; j < nu.size(); ++j) {
      double d = distance(nu.atoms[i], nu.atoms[j]);
      double term;
      if (d == 0.0) {
        if (t > 0.0) return std::numeric_limits<double>::infinity();
        term = 2.0 * nu.weights[i] * nu.weights[j];
      } else {
        term = 2.0 * nu.weights[i] * nu.weights[j] * std::pow(d, -t);
      }
      double y = term - comp;
      double s = sum + y;
      comp = (s - sum) - y;
      sum = s;
    }
  }
  return sum;
}

}  // namespace dimdist
