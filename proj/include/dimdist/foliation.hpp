#ifndef DIMDIST_FOLIATION_HPP
#define DIMDIST_FOLIATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "dimdist/carpet.hpp"
#include "dimdist/point.hpp"

namespace dimdist {

/// Foliation charts over H^1 (V fixed as the x-axis horizontal line),
/// the carpet vertical projection, and plain Euclidean projections.
enum class ChartKind { EuclideanProjection, CarpetVertical, HeisLeft, HeisRight };

std::string chart_name(ChartKind kind);
ChartKind chart_from_name(const std::string& name);

struct FoliationChart {
  ChartKind kind = ChartKind::HeisRight;
  int ambient_dim = 2;     // euclidean projections only
  int subspace_dim = 1;    // euclidean projections: parameter coordinates kept
  CarpetSpec carpet;       // carpet_vertical only
  int carpet_depth = 4;

  /// David-Semmes exponent of the chart: carpet 1, heis_left 3,
  /// heis_right 2, euclidean ambient-minus-subspace.
  double regularity_exponent() const;
};

/// Left splitting p = p_{Vperp} * p_V for p = (x,y,t) in H^1:
/// returns ((0, y, t - 2xy), (x, 0, 0)); recomposition is exact.
std::pair<Point, Point> project_left(const Point& p);

/// Right splitting p = p_V * p^R_{Vperp}:
/// returns ((x, 0, 0), (0, y, t + 2xy)); recomposition is exact.
std::pair<Point, Point> project_right(const Point& p);

/// Parameter of the leaf through p: heis_left -> euclid(x); heis_right ->
/// grushin (y, t + 2xy); carpet -> euclid(x); euclidean -> leading coords.
Point chart_project(const FoliationChart& chart, const Point& p);

/// Sample of the leaf pi^{-1}(a). Grids:
///  - heis_right: a = grushin (u,v); points (x, u, v - 2xu), x in g1
///  - heis_left:  a = (x0,0,0); points (0,y,tau)*a, y in g1, tau in g2
///  - carpet:     a = euclid(u); points (u,v), v in g1, filtered by the carpet
///  - euclidean:  a ++ w, w over g1 (x g2 when the complement is 2-D)
std::vector<Point> leaf_sample(const FoliationChart& chart, const Point& a,
                               const std::vector<double>& g1,
                               const std::vector<double>& g2 = {});

/// Left coset a*V of the horizontal line through a in Vperp: a horizontal
/// line {(x, y0, tau0 + 2 x y0)}, the dimension-1 leaves behind the
/// s_hat < s gap of the left-coset foliations.
std::vector<Point> horizontal_coset_sample(const Point& a_vperp,
                                           const std::vector<double>& x_grid);

}  // namespace dimdist

#endif
