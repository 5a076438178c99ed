#include "dimdist/quotient.hpp"

#include <algorithm>
#include <cmath>

#include "dimdist/error.hpp"
#include "dimdist/heisenberg.hpp"

namespace dimdist {

namespace {

Point leaf_rep(const Point& a, double x) {
  return heis(x, a.x[1], a.x[2] - 2.0 * x * a.x[1]);
}

void check_coset_param(const Point& a) {
  if (heis_n(a) != 1 || a.x[0] != 0.0)
    throw InvalidParameter("coset parameters must have the form (0, y, tau)");
}

}  // namespace

QuotientDistance coset_quotient_distance(const Point& a1, const Point& a2,
                                         double anchor_x, double C1) {
  check_coset_param(a1);
  check_coset_param(a2);

  QuotientDistance out;
  out.bracket = grushin_bracket(grushin_pt(a1.x[1], a1.x[2]),
                                grushin_pt(a2.x[1], a2.x[2]), C1);
  Point p1 = leaf_rep(a1, anchor_x);
  auto norm_at = [&](double x) { return koranyi_dist(p1, leaf_rep(a2, x)); };

  // The Koranyi norm of p1^{-1} * leaf_rep(a2, x) is >= |x - anchor_x| in
  // the horizontal component, so the minimizer lies within norm_at(anchor_x)
  // of the anchor; pad the bracket slightly.
  double radius = norm_at(anchor_x) + 1.0;
  double lo = anchor_x - radius, hi = anchor_x + radius;

  const int grid = 512;
  double best_x = anchor_x, best_v = norm_at(anchor_x);
  for (int i = 0; i <= grid; ++i) {
    double x = lo + (hi - lo) * double(i) / grid;
    double v = norm_at(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }

  // Golden-section refinement on the surrounding grid interval.
  double step = (hi - lo) / grid;
  double a = best_x - step, b = best_x + step;
  const double invphi = 0.6180339887498948482;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = norm_at(c), fd = norm_at(d);
  int iters = 0;
  const int max_iters = 200;
  while (b - a > 1e-10 && iters++ < max_iters) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = norm_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = norm_at(d);
    }
  }
  out.coarse = (b - a > 1e-8);
  double mid = 0.5 * (a + b);
  double fm = norm_at(mid);
  if (fm < best_v) {
    best_v = fm;
    best_x = mid;
  }
  out.value = best_v;
  out.minimizer = best_x;
  return out;
}

}  // namespace dimdist
