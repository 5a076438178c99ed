#include "dimdist/datasets.hpp"

#include <cmath>

#include "dimdist/error.hpp"
#include "dimdist/rng.hpp"

namespace dimdist {

std::vector<Point> cantor_line(int depth) {
  if (depth < 0) throw InvalidParameter("cantor_line depth must be >= 0");
  std::vector<double> xs{0.0};
  double scale = 1.0;
  for (int k = 0; k < depth; ++k) {
    scale /= 3.0;
    std::vector<double> next;
    next.reserve(xs.size() * 2);
    for (double x : xs) {
      next.push_back(x);
      next.push_back(x + 2.0 * scale);
    }
    xs = std::move(next);
  }
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back(euclid(x));
  return pts;
}

std::vector<Point> cantor_dust(int depth) {
  if (depth < 0) throw InvalidParameter("cantor_dust depth must be >= 0");
  std::vector<std::pair<double, double>> cells{{0.0, 0.0}};
  double scale = 1.0;
  for (int k = 0; k < depth; ++k) {
    scale /= 4.0;
    std::vector<std::pair<double, double>> next;
    next.reserve(cells.size() * 4);
    for (auto [x, y] : cells) {
      next.push_back({x, y});
      next.push_back({x + 3.0 * scale, y});
      next.push_back({x, y + 3.0 * scale});
      next.push_back({x + 3.0 * scale, y + 3.0 * scale});
    }
    cells = std::move(next);
  }
  std::vector<Point> pts;
  pts.reserve(cells.size());
  for (auto [x, y] : cells) pts.push_back(euclid(x, y));
  return pts;
}

std::vector<Point> uniform_cube(std::size_t count, int dim, std::uint64_t seed) {
  if (dim < 1) throw InvalidParameter("uniform_cube dim must be >= 1");
  RngStream rng(seed);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(static_cast<std::size_t>(dim), 0.0);
    for (auto& v : c) v = rng.uniform();
    pts.push_back(euclid(std::move(c)));
  }
  return pts;
}

std::vector<Point> koranyi_ball_sample(std::size_t count, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<Point> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    double x = rng.uniform(-1.0, 1.0);
    double y = rng.uniform(-1.0, 1.0);
    double t = rng.uniform(-1.0, 1.0);
    double n2 = x * x + y * y;
    if (n2 * n2 + t * t < 1.0) pts.push_back(heis(x, y, t));
  }
  return pts;
}

std::vector<double> geometric_scales(double r_max, double r_min, double ratio) {
  if (!(r_max > r_min && r_min > 0.0)) throw InvalidParameter("need r_max > r_min > 0");
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidParameter("ratio must be in (0,1)");
  std::vector<double> scales;
  for (double r = r_max; r >= r_min * (1.0 - 1e-12); r *= ratio) scales.push_back(r);
  return scales;
}

}  // namespace dimdist
