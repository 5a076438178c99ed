#include "dimdist/frostman.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "dimdist/error.hpp"

namespace dimdist {

namespace {

std::vector<std::size_t> assign_nearest(const std::vector<Point>& pts,
                                        const std::vector<Point>& centers) {
  std::vector<std::size_t> owner(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
      double d = distance(pts[i], centers[c]);
      if (d < best) {
        best = d;
        owner[i] = c;
      }
    }
  }
  return owner;
}

double sample_resolution(const std::vector<Point>& pts) {
  // median nearest-neighbor distance over a deterministic subsample
  std::size_t stride = std::max<std::size_t>(1, pts.size() / 256);
  std::vector<double> nn;
  for (std::size_t i = 0; i < pts.size(); i += stride) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      best = std::min(best, distance(pts[i], pts[j]));
    }
    if (std::isfinite(best)) nn.push_back(best);
  }
  if (nn.empty()) return 0.0;
  std::nth_element(nn.begin(), nn.begin() + nn.size() / 2, nn.end());
  return nn[nn.size() / 2];
}

}  // namespace

FrostmanResult frostman_measure(const std::vector<Point>& sample, double s, int depth) {
  if (sample.empty()) throw EmptyInput("frostman_measure");
  if (s < 0.0) throw InvalidParameter("frostman exponent s must be >= 0");
  if (depth < 1) throw InvalidParameter("frostman depth must be >= 1");

  FrostmanResult res;
  res.nets.reserve(depth);
  for (int k = 1; k <= depth; ++k) {
    double eps = std::ldexp(1.0, -k);
    const Net* seed = res.nets.empty() ? nullptr : &res.nets.back();
    res.nets.push_back(maximal_separated_net(sample, eps, seed));
  }

  // cell ownership per level, and per-cell sample counts
  std::vector<std::vector<std::size_t>> owner(depth);
  for (int k = 0; k < depth; ++k) owner[k] = assign_nearest(sample, res.nets[k].centers);

  // top-down proportional split with per-cell cap (2^-k)^s
  std::vector<double> mass;  // of current level's cells
  for (int k = 0; k < depth; ++k) {
    double scale_s = std::pow(std::ldexp(1.0, -(k + 1)), s);
    std::size_t ncells = res.nets[k].centers.size();
    std::vector<double> counts(ncells, 0.0);
    for (auto c : owner[k]) counts[c] += 1.0;

    std::vector<double> next(ncells, 0.0);
    if (k == 0) {
      double total = double(sample.size());
      for (std::size_t c = 0; c < ncells; ++c)
        next[c] = std::min(counts[c] / total, scale_s);
    } else {
      // children of a parent cell: this level's cells grouped by the parent
      // owning their center point; center points are sample points, so we
      // reuse the parent assignment of the nearest sample index. Assign each
      // cell to the parent cell owning most of its sample points.
      std::size_t nparent = res.nets[k - 1].centers.size();
      std::vector<double> parent_child_count(ncells, 0.0);
      std::vector<std::size_t> parent_of(ncells, 0);
      {
        // majority vote over sparse (cell,parent) tallies
        std::unordered_map<std::uint64_t, double> tally;
        for (std::size_t i = 0; i < sample.size(); ++i)
          tally[(std::uint64_t(owner[k][i]) << 32) | owner[k - 1][i]] += 1.0;
        std::vector<double> best(ncells, -1.0);
        for (const auto& [key, cnt] : tally) {
          std::size_t c = key >> 32;
          std::size_t pidx = std::size_t(key & 0xffffffffull);
          if (cnt > best[c] || (cnt == best[c] && pidx < parent_of[c])) {
            best[c] = cnt;
            parent_of[c] = pidx;
          }
        }
        (void)nparent;
      }
      std::vector<double> parent_count_sum(nparent, 0.0);
      for (std::size_t c = 0; c < ncells; ++c) parent_count_sum[parent_of[c]] += counts[c];
      for (std::size_t c = 0; c < ncells; ++c) {
        double share = parent_count_sum[parent_of[c]] > 0.0
                           ? counts[c] / parent_count_sum[parent_of[c]]
                           : 0.0;
        next[c] = std::min(mass[parent_of[c]] * share, scale_s);
      }
    }
    mass = std::move(next);
  }

  // spread finest cell mass equally over its sample points
  std::vector<double> counts(res.nets[depth - 1].centers.size(), 0.0);
  for (auto c : owner[depth - 1]) counts[c] += 1.0;
  std::vector<double> weights(sample.size(), 0.0);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    std::size_t c = owner[depth - 1][i];
    weights[i] = counts[c] > 0.0 ? mass[c] / counts[c] : 0.0;
  }
  res.measure = DiscreteMeasure::make(sample, std::move(weights));
  // collapsed mass: either numerically zero, or pinned to the finest-scale
  // cap (a single atom with s > 0 never escapes the per-cell cap)
  double finest_cap = std::pow(std::ldexp(1.0, -depth), s);
  res.degenerate = res.measure.total_mass < 1e-9 ||
                   (s > 0.0 && res.measure.total_mass <= finest_cap * (1.0 + 1e-9));

  // audit: smallest C with nu(B(x,r)) <= C r^s over sampled balls
  double r_max = 1.0;
  double r_min = std::ldexp(1.0, -depth);
  double C = 0.0;
  std::size_t stride = std::max<std::size_t>(1, sample.size() / 128);
  const int n_radii = 16;
  for (int j = 0; j <= n_radii; ++j) {
    double r = r_min * std::pow(r_max / r_min, double(j) / n_radii);
    double rs = std::pow(r, s);
    for (std::size_t i = 0; i < sample.size(); i += stride) {
      double m = res.measure.ball_mass(sample[i], r);
      if (m > 0.0 && rs > 0.0) C = std::max(C, m / rs);
    }
  }
  res.audited_C = C;
  return res;
}

FrostmanResult frostman_measure(const std::vector<Point>& sample, double s) {
  double res_scale = sample_resolution(sample);
  int depth = 8;
  if (res_scale > 0.0) depth = std::max(2, std::min(24, int(std::ceil(-std::log2(res_scale)))));
  return frostman_measure(sample, s, depth);
}

}  // namespace dimdist
