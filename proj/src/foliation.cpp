#include "dimdist/foliation.hpp"

#include "dimdist/error.hpp"
#include "dimdist/grushin.hpp"
#include "dimdist/heisenberg.hpp"

namespace dimdist {

std::string chart_name(ChartKind kind) {
  switch (kind) {
    case ChartKind::EuclideanProjection: return "euclidean_projection";
    case ChartKind::CarpetVertical: return "carpet_vertical";
    case ChartKind::HeisLeft: return "heis_left";
    case ChartKind::HeisRight: return "heis_right";
  }
  return "unknown";
}

ChartKind chart_from_name(const std::string& name) {
  if (name == "euclidean_projection") return ChartKind::EuclideanProjection;
  if (name == "carpet_vertical") return ChartKind::CarpetVertical;
  if (name == "heis_left") return ChartKind::HeisLeft;
  if (name == "heis_right") return ChartKind::HeisRight;
  throw InvalidParameter("unknown chart kind: " + name);
}

double FoliationChart::regularity_exponent() const {
  switch (kind) {
    case ChartKind::EuclideanProjection: return double(ambient_dim - subspace_dim);
    case ChartKind::CarpetVertical: return 1.0;
    case ChartKind::HeisLeft: return 3.0;   // dim_H Vperp
    case ChartKind::HeisRight: return 2.0;  // Grushin-parameterized right cosets
  }
  return 0.0;
}

static void check_h1(const Point& p) {
  if (heis_n(p) != 1) throw InvalidParameter("foliation charts are specialized to H^1");
}

std::pair<Point, Point> project_left(const Point& p) {
  check_h1(p);
  double x = p.x[0], y = p.x[1], t = p.x[2];
  return {heis(0.0, y, t - 2.0 * x * y), heis(x, 0.0, 0.0)};
}

std::pair<Point, Point> project_right(const Point& p) {
  check_h1(p);
  double x = p.x[0], y = p.x[1], t = p.x[2];
  return {heis(x, 0.0, 0.0), heis(0.0, y, t + 2.0 * x * y)};
}

Point chart_project(const FoliationChart& chart, const Point& p) {
  switch (chart.kind) {
    case ChartKind::HeisLeft:
      return euclid(p.x[0]);
    case ChartKind::HeisRight: {
      check_h1(p);
      return grushin_pt(p.x[1], p.x[2] + 2.0 * p.x[0] * p.x[1]);
    }
    case ChartKind::CarpetVertical:
      return euclid(p.x[0]);
    case ChartKind::EuclideanProjection: {
      std::vector<double> coords(p.x.begin(), p.x.begin() + chart.subspace_dim);
      return euclid(std::move(coords));
    }
  }
  throw InvalidParameter("unknown chart kind");
}

std::vector<Point> leaf_sample(const FoliationChart& chart, const Point& a,
                               const std::vector<double>& g1,
                               const std::vector<double>& g2) {
  std::vector<Point> leaf;
  switch (chart.kind) {
    case ChartKind::HeisRight: {
      if (a.space != Space::Grushin)
        throw SpaceMismatch("heis_right leaf parameter must be a grushin point");
      double u = a.x[0], v = a.x[1];
      for (double x : g1) leaf.push_back(heis(x, u, v - 2.0 * x * u));
      break;
    }
    case ChartKind::HeisLeft: {
      check_h1(a);
      if (a.x[1] != 0.0 || a.x[2] != 0.0)
        throw InvalidParameter("heis_left leaf parameter must lie in V (x-axis)");
      const std::vector<double>& taus = g2.empty() ? g1 : g2;
      for (double y : g1)
        for (double tau : taus)
          leaf.push_back(heis_mul(heis(0.0, y, tau), a));
      break;
    }
    case ChartKind::CarpetVertical: {
      if (a.x.size() != 1) throw InvalidParameter("carpet leaf parameter must be 1-D");
      double u = a.x[0];
      for (double v : g1) {
        if (v < 0.0 || v > 1.0) continue;
        if (carpet_contains(chart.carpet, u, v, chart.carpet_depth)) {
          Point p;
          p.space = Space::Carpet;
          p.x = {u, v};
          leaf.push_back(std::move(p));
        }
      }
      break;
    }
    case ChartKind::EuclideanProjection: {
      int comp = chart.ambient_dim - chart.subspace_dim;
      if (comp < 1 || comp > 2)
        throw InvalidParameter("euclidean leaf sampling supports 1- or 2-D complements");
      if (int(a.x.size()) != chart.subspace_dim)
        throw InvalidParameter("euclidean leaf parameter dimension mismatch");
      auto emit = [&](double w1, double w2) {
        std::vector<double> coords = a.x;
        coords.push_back(w1);
        if (comp == 2) coords.push_back(w2);
        leaf.push_back(euclid(std::move(coords)));
      };
      if (comp == 1) {
        for (double w : g1) emit(w, 0.0);
      } else {
        for (double w1 : g1)
          for (double w2 : (g2.empty() ? g1 : g2)) emit(w1, w2);
      }
      break;
    }
  }
  return leaf;
}

std::vector<Point> horizontal_coset_sample(const Point& a_vperp,
                                           const std::vector<double>& x_grid) {
  check_h1(a_vperp);
  if (a_vperp.x[0] != 0.0)
    throw InvalidParameter("horizontal coset base point must lie in Vperp");
  double y0 = a_vperp.x[1], tau0 = a_vperp.x[2];
  std::vector<Point> out;
  out.reserve(x_grid.size());
  for (double x : x_grid) out.push_back(heis(x, y0, tau0 + 2.0 * x * y0));
  return out;
}

}  // namespace dimdist
