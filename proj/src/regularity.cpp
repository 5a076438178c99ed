#include "dimdist/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dimdist/csv.hpp"
#include "dimdist/error.hpp"
#include "dimdist/grushin.hpp"
#include "dimdist/net.hpp"
#include "dimdist/rng.hpp"

namespace dimdist {

double RegularityTable::window_ratio() const {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& row : rows) {
    if (row.N == 0) continue;
    if (first) {
      lo = hi = row.normalized;
      first = false;
    } else {
      lo = std::min(lo, row.normalized);
      hi = std::max(hi, row.normalized);
    }
  }
  return first ? 0.0 : hi / lo;
}

namespace {

constexpr std::size_t kMaxSlabPoints = 2'000'000;

std::vector<std::vector<double>> default_centers(const FoliationChart& chart) {
  switch (chart.kind) {
    case ChartKind::CarpetVertical:
      return {{0.25}, {0.5}, {0.75}};
    case ChartKind::HeisLeft:
      return {{0.0}, {0.05}, {-0.07}};
    case ChartKind::HeisRight:
      // (u, v) = (y, t + 2xy); kept away from the degenerate axis u = 0.
      return {{0.35, 0.0}, {-0.3, 0.01}, {0.32, -0.02}};
    case ChartKind::EuclideanProjection: {
      std::vector<double> c(std::size_t(chart.subspace_dim), 0.5);
      return {c};
    }
  }
  return {};
}

// Uniform sample of the left-coset slab {|x - a| < r} intersected with the
// coordinate box K; the slab is a product box, so sampling is direct.
std::vector<Point> heis_left_slab(double a, double r, const RegularityConfig& cfg,
                                  RngStream& rng) {
  double xlo = std::max(a - r, -cfg.x_halfwidth);
  double xhi = std::min(a + r, cfg.x_halfwidth);
  if (!(xhi > xlo)) return {};
  double vol = (xhi - xlo) * (2.0 * cfg.y_halfwidth) * (2.0 * cfg.t_halfwidth);
  std::size_t count = std::size_t(std::ceil(cfg.density_factor * vol / std::pow(r, 4)));
  count = std::min(count, kMaxSlabPoints);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = rng.uniform(xlo, xhi);
    double y = rng.uniform(-cfg.y_halfwidth, cfg.y_halfwidth);
    double t = rng.uniform(-cfg.t_halfwidth, cfg.t_halfwidth);
    pts.push_back(heis(x, y, t));
  }
  return pts;
}

// Uniform sample of the right-coset slab: the preimage, over the x range of
// K, of the Grushin-core ball B((u0,v0), r). Sampling happens in the sheared
// coordinates (x, u, w) with w = t + 2xu, which preserve Lebesgue measure;
// candidates are drawn from a bounding box of the core ball and rejected
// against the exact core, so the kept density is cfg.density_factor points
// per r^4 of slab volume.
std::vector<Point> heis_right_slab(double u0, double v0, double r,
                                   const RegularityConfig& cfg, RngStream& rng) {
  double vhw = std::max(r * r, r * (std::abs(u0) + r));
  double box_vol = (2.0 * cfg.x_halfwidth) * (2.0 * r) * (2.0 * vhw);
  std::size_t cand = std::size_t(std::ceil(cfg.density_factor * box_vol / std::pow(r, 4)));
  cand = std::min(cand, 4 * kMaxSlabPoints);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < cand; ++i) {
    double x = rng.uniform(-cfg.x_halfwidth, cfg.x_halfwidth);
    double u = rng.uniform(u0 - r, u0 + r);
    double w = rng.uniform(v0 - vhw, v0 + vhw);
    if (grushin_core(u, w, u0, v0) < r) pts.push_back(heis(x, u, w - 2.0 * x * u));
  }
  return pts;
}

}  // namespace

RegularityTable ds_regularity_table(const FoliationChart& chart, double s,
                                    const std::vector<double>& r_grid,
                                    const RegularityConfig& cfg) {
  if (r_grid.empty()) throw EmptyInput("ds_regularity_table r_grid");
  for (std::size_t i = 1; i < r_grid.size(); ++i)
    if (!(r_grid[i] < r_grid[i - 1]))
      throw InvalidParameter("r_grid must be strictly decreasing");

  RegularityTable table;
  table.chart = chart.kind;
  table.s = s;

  auto centers = cfg.param_centers.empty() ? default_centers(chart) : cfg.param_centers;
  if (centers.size() > std::size_t(cfg.max_param_centers))
    centers.resize(std::size_t(cfg.max_param_centers));
  CounterRng root(cfg.seed);

  // Shared dense sample for the chart kinds where one is feasible.
  std::vector<Point> K_sample;
  switch (chart.kind) {
    case ChartKind::CarpetVertical: {
      K_sample = carpet_enumerate(chart.carpet, cfg.carpet_depth).points;
      std::ostringstream id;
      id << "carpet_depth" << cfg.carpet_depth;
      table.K_id = id.str();
      break;
    }
    case ChartKind::EuclideanProjection: {
      double h = r_grid.back() / 3.0;
      int side = int(std::floor(1.0 / h)) + 1;
      if (chart.ambient_dim > 3) throw InvalidParameter("euclidean charts support <= 3 dims");
      std::vector<double> coords(std::size_t(chart.ambient_dim), 0.0);
      std::vector<int> idx(std::size_t(chart.ambient_dim), 0);
      for (;;) {
        for (int d = 0; d < chart.ambient_dim; ++d) coords[std::size_t(d)] = idx[std::size_t(d)] * h;
        K_sample.push_back(euclid(coords));
        int d = 0;
        while (d < chart.ambient_dim && ++idx[std::size_t(d)] > side) {
          idx[std::size_t(d)] = 0;
          ++d;
        }
        if (d == chart.ambient_dim) break;
      }
      table.K_id = "unit_cube_grid";
      break;
    }
    case ChartKind::HeisLeft:
    case ChartKind::HeisRight: {
      std::ostringstream id;
      id << "koranyi_box(x" << cfg.x_halfwidth << ",y" << cfg.y_halfwidth << ",t"
         << cfg.t_halfwidth << ",mc" << cfg.density_factor << ")";
      table.K_id = id.str();
      break;
    }
  }

  for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
    double r = r_grid[ri];
    std::size_t worst = 0;
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
      std::vector<Point> slab;
      switch (chart.kind) {
        case ChartKind::CarpetVertical: {
          double a = centers[ci][0];
          for (const auto& p : K_sample)
            if (std::abs(p.x[0] - a) < r) slab.push_back(p);
          break;
        }
        case ChartKind::EuclideanProjection: {
          for (const auto& p : K_sample) {
            double d2 = 0.0;
            for (int d = 0; d < chart.subspace_dim; ++d) {
              double dd = p.x[std::size_t(d)] - centers[ci][std::size_t(d)];
              d2 += dd * dd;
            }
            if (d2 < r * r) slab.push_back(p);
          }
          break;
        }
        case ChartKind::HeisLeft: {
          RngStream rng(root.split(ri * 64 + ci));
          slab = heis_left_slab(centers[ci][0], r, cfg, rng);
          break;
        }
        case ChartKind::HeisRight: {
          RngStream rng(root.split(ri * 64 + ci));
          slab = heis_right_slab(centers[ci][0], centers[ci][1], r, cfg, rng);
          break;
        }
      }
      if (slab.empty()) continue;  // empty preimage: skipped
      worst = std::max(worst, greedy_cover_count(slab, r).count);
    }
    RegularityRow row;
    row.r = r;
    row.N = worst;
    row.normalized = double(worst) * std::pow(r, s);
    table.rows.push_back(row);
  }
  return table;
}

void write_regularity_csv(const std::string& path, const RegularityTable& table) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open " + path);
  os << "r,N,N_r_pow_s,chart,s,K_id\n";
  for (const auto& row : table.rows) {
    os << format_double(row.r) << ',' << row.N << ',' << format_double(row.normalized)
       << ',' << chart_name(table.chart) << ',' << format_double(table.s) << ','
       << table.K_id << '\n';
  }
}

}  // namespace dimdist
