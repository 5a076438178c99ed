#ifndef DIMDIST_DATASETS_HPP
#define DIMDIST_DATASETS_HPP

#include <cstdint>
#include <vector>

#include "dimdist/point.hpp"

namespace dimdist {

/// Left endpoints of the depth-k middle-thirds Cantor construction on
/// [0,1]: 2^depth points, dimension log 2 / log 3.
std::vector<Point> cantor_line(int depth);

/// Four-corner Cantor dust in [0,1]^2: IFS of 4 similarities of ratio 1/4
/// mapping to the corners; 4^depth cell corners, dimension 1.
std::vector<Point> cantor_dust(int depth);

/// count uniform points in [0,1]^dim, seed-deterministic.
std::vector<Point> uniform_cube(std::size_t count, int dim, std::uint64_t seed);

/// count uniform points in the Koranyi unit ball of H^1 (rejection from the
/// bounding box), seed-deterministic.
std::vector<Point> koranyi_ball_sample(std::size_t count, std::uint64_t seed);

/// Geometric scale grid r_max * ratio^k down to r_min (inclusive bounds).
std::vector<double> geometric_scales(double r_max, double r_min, double ratio);

}  // namespace dimdist

#endif
