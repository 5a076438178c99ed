#include "dimdist/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "dimdist/error.hpp"
#include "dimdist/net.hpp"

namespace dimdist {

namespace {

// Occupied coordinate boxes of side r, anchored at the bounding-box
// minimum. The box mesh has a scale-invariant prefactor, unlike greedy
// ball covers, whose overlap factor drifts with the per-ball point density
// and biases the slope.
std::size_t anchored_box_count(const std::vector<Point>& points, double r) {
  std::vector<double> lo(points.front().x.size(),
                         std::numeric_limits<double>::infinity());
  for (const auto& p : points)
    for (std::size_t d = 0; d < lo.size(); ++d) lo[d] = std::min(lo[d], p.x[d]);
  std::set<std::vector<long long>> cells;
  std::vector<long long> key;
  for (const auto& p : points) {
    key.clear();
    for (std::size_t d = 0; d < lo.size(); ++d)
      key.push_back((long long)std::floor((p.x[d] - lo[d]) / r));
    cells.insert(key);
  }
  return cells.size();
}

// Coordinate boxes are not comparable to Koranyi or Grushin balls away from
// the origin (the group twist tilts them), so those spaces keep ball covers.
bool mesh_countable(Space s) { return s == Space::Euclidean || s == Space::Carpet; }

}  // namespace

DimensionEstimate box_dimension(const std::vector<Point>& points,
                                const std::vector<double>& r_grid) {
  if (points.empty()) throw EmptyInput("box_dimension");
  if (r_grid.size() < 2) throw InvalidParameter("box_dimension needs >= 2 scales");
  for (std::size_t i = 1; i < r_grid.size(); ++i)
    if (!(r_grid[i] < r_grid[i - 1]))
      throw InvalidParameter("box_dimension scales must be strictly decreasing");

  DimensionEstimate est;
  est.point_count = points.size();
  est.r_max = r_grid.front();
  est.r_min = r_grid.back();

  bool mesh = mesh_countable(points.front().space);
  for (double r : r_grid) {
    est.scales.push_back(r);
    est.counts.push_back(mesh ? anchored_box_count(points, r)
                              : greedy_cover_count(points, r).count);
  }

  bool all_equal = std::all_of(est.counts.begin(), est.counts.end(),
                               [&](std::size_t c) { return c == est.counts.front(); });
  if (all_equal) {
    est.value = 0.0;
    est.degenerate = true;
    est.slope_residual = std::numeric_limits<double>::infinity();
    return est;
  }

  // OLS of log N against log(1/r)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = est.scales.size();
  for (std::size_t i = 0; i < n; ++i) {
    double xi = -std::log(est.scales[i]);
    double yi = std::log(double(est.counts[i]));
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  double denom = double(n) * sxx - sx * sx;
  double slope = (double(n) * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / double(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double xi = -std::log(est.scales[i]);
    double yi = std::log(double(est.counts[i]));
    double e = yi - (slope * xi + intercept);
    ss += e * e;
  }
  est.value = std::max(0.0, slope);
  est.slope_residual = std::sqrt(ss / double(n));
  return est;
}

std::vector<double> default_scale_grid(const std::vector<Point>& points, int n_scales) {
  if (points.size() < 2) throw InvalidParameter("scale grid needs >= 2 points");
  // sample resolution: median nearest-neighbor distance over a subsample
  std::size_t stride = std::max<std::size_t>(1, points.size() / 200);
  std::vector<double> nn;
  for (std::size_t i = 0; i < points.size(); i += stride) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      double d = distance(points[i], points[j]);
      if (d > 0.0) best = std::min(best, d);
    }
    if (std::isfinite(best)) nn.push_back(best);
  }
  if (nn.empty()) throw InvalidParameter("degenerate sample: all points coincide");
  std::nth_element(nn.begin(), nn.begin() + nn.size() / 2, nn.end());
  double res = nn[nn.size() / 2];

  double diam = 0.0;
  stride = std::max<std::size_t>(1, points.size() / 400);
  for (std::size_t i = 0; i < points.size(); i += stride)
    for (std::size_t j = i + 1; j < points.size(); j += stride)
      diam = std::max(diam, distance(points[i], points[j]));

  // stay a safe factor above the sample resolution: near it, mesh boxes
  // hold O(1) points each and under-occupancy drags the slope down
  double lo = res * 8.0;
  double hi = diam / 4.0;
  if (!(hi > lo)) {
    lo = diam / 64.0;
    hi = diam / 4.0;
  }

  if (mesh_countable(points.front().space)) {
    // integer subdivisions of the longest bounding-box side: a side of
    // length extent/m tiles the box exactly, so the ceiling wobble of a
    // generic mesh (N = ceil(extent/r)^d at coarse scales) cancels
    double extent = 0.0;
    for (std::size_t d = 0; d < points.front().x.size(); ++d) {
      double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin;
      for (const auto& p : points) {
        cmin = std::min(cmin, p.x[d]);
        cmax = std::max(cmax, p.x[d]);
      }
      extent = std::max(extent, cmax - cmin);
    }
    if (extent > 0.0) {
      long long m_lo = std::max<long long>(4, (long long)std::ceil(extent / hi));
      long long m_hi = std::max(m_lo * 8, (long long)std::floor(extent / lo));
      std::vector<double> grid;
      long long prev = 0;
      for (int i = 0; i < n_scales; ++i) {
        double f = double(i) / double(n_scales - 1);
        long long m = (long long)std::llround(
            double(m_lo) * std::pow(double(m_hi) / double(m_lo), f));
        if (m <= prev) m = prev + 1;
        prev = m;
        grid.push_back(extent / double(m));
      }
      return grid;
    }
  }

  std::vector<double> grid;
  for (int i = 0; i < n_scales; ++i)
    grid.push_back(hi * std::pow(lo / hi, double(i) / double(n_scales - 1)));
  return grid;
}

DimensionEstimate box_dimension(const std::vector<Point>& points) {
  if (points.size() == 1) {
    DimensionEstimate est;
    est.value = 0.0;
    est.point_count = 1;
    est.degenerate = true;
    est.slope_residual = std::numeric_limits<double>::infinity();
    est.r_min = est.r_max = 1.0;
    return est;
  }
  return box_dimension(points, default_scale_grid(points));
}

}  // namespace dimdist
