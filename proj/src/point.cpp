#include "dimdist/point.hpp"

#include <algorithm>
#include <cmath>

#include "dimdist/error.hpp"
#include "dimdist/grushin.hpp"
#include "dimdist/heisenberg.hpp"

namespace dimdist {

std::string space_name(Space s) {
  switch (s) {
    case Space::Euclidean: return "euclidean";
    case Space::Heisenberg: return "heisenberg";
    case Space::Grushin: return "grushin";
    case Space::Carpet: return "carpet";
  }
  return "unknown";
}

Space space_from_name(const std::string& name) {
  if (name == "euclidean") return Space::Euclidean;
  if (name == "heisenberg") return Space::Heisenberg;
  if (name == "grushin") return Space::Grushin;
  if (name == "carpet") return Space::Carpet;
  throw InvalidParameter("unknown space tag: " + name);
}

static double euclidean_dist(const Point& p, const Point& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    double d = p.x[i] - q.x[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double distance(const Point& p, const Point& q) {
  if (p.space != q.space)
    throw SpaceMismatch(space_name(p.space) + " vs " + space_name(q.space));
  if (p.x.size() != q.x.size())
    throw SpaceMismatch("coordinate dimensions differ");
  switch (p.space) {
    case Space::Euclidean:
    case Space::Carpet:
      return euclidean_dist(p, q);
    case Space::Heisenberg:
      return koranyi_dist(p, q);
    case Space::Grushin:
      return grushin_core(p, q);
  }
  return 0.0;
}

void check_same_space(const std::vector<Point>& pts) {
  if (pts.empty()) return;
  for (const auto& p : pts) {
    if (p.space != pts.front().space || p.x.size() != pts.front().x.size())
      throw SpaceMismatch("mixed space tags in point sample");
  }
}

double diameter(const std::vector<Point>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

}  // namespace dimdist
