#ifndef DIMDIST_ENERGY_HPP
#define DIMDIST_ENERGY_HPP

#include "dimdist/measure.hpp"

namespace dimdist {

/// Discrete t-energy sum_{i != j} w_i w_j d(x_i,x_j)^{-t}, diagonal
/// excluded. Coincident distinct atoms with t > 0 yield +inf. Compensated
/// summation keeps the result independent of reduction order.
double t_energy(const DiscreteMeasure& nu, double t);

}  // namespace dimdist

#endif
