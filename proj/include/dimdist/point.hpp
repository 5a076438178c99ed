#ifndef DIMDIST_POINT_HPP
#define DIMDIST_POINT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dimdist {

enum class Space { Euclidean, Heisenberg, Grushin, Carpet };

std::string space_name(Space s);
Space space_from_name(const std::string& name);

/// A point in one of the supported model spaces, stored in the space's
/// native chart. Heisenberg points have 2n+1 coordinates (x in R^{2n}, t).
/// Carpet points live in [0,1]^2 and carry the digit address of the
/// retained cell per construction level.
struct Point {
  Space space = Space::Euclidean;
  std::vector<double> x;
  std::vector<int> address;  // carpet only: retained-cell index per level

  std::size_t dim() const { return x.size(); }
  bool operator==(const Point& o) const { return space == o.space && x == o.x; }
};

inline Point euclid(std::vector<double> coords) {
  return Point{Space::Euclidean, std::move(coords), {}};
}
inline Point euclid(double a) { return euclid(std::vector<double>{a}); }
inline Point euclid(double a, double b) { return euclid({a, b}); }
inline Point heis(double x, double y, double t) {
  return Point{Space::Heisenberg, {x, y, t}, {}};
}
inline Point grushin_pt(double u, double v) {
  return Point{Space::Grushin, {u, v}, {}};
}

struct Ball {
  Point center;
  double radius = 0.0;  // > 0
};

/// Metric dispatch: Euclidean/carpet points use the Euclidean metric,
/// Heisenberg points the Koranyi metric, Grushin points the core of the
/// two-sided CC estimate. Throws SpaceMismatch on differing tags.
double distance(const Point& p, const Point& q);

/// Checks all points share one space tag (and Heisenberg dimension).
void check_same_space(const std::vector<Point>& pts);

double diameter(const std::vector<Point>& pts);

}  // namespace dimdist

#endif
