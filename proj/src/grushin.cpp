#include "dimdist/grushin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dimdist/error.hpp"

namespace dimdist {

double grushin_core(double u1, double v1, double u2, double v2) {
  double du = std::abs(u1 - u2);
  double dv = std::abs(v1 - v2);
  double umax = std::max(std::abs(u1), std::abs(u2));
  double ratio = (umax > 0.0) ? dv / umax
                              : (dv > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  return std::max(du, std::min(std::sqrt(dv), ratio));
}

static void check_grushin(const Point& w) {
  if (w.space != Space::Grushin)
    throw SpaceMismatch("expected grushin point, got " + space_name(w.space));
  if (w.x.size() != 2) throw InvalidParameter("grushin point needs 2 coordinates");
}

double grushin_core(const Point& w1, const Point& w2) {
  check_grushin(w1);
  check_grushin(w2);
  return grushin_core(w1.x[0], w1.x[1], w2.x[0], w2.x[1]);
}

GrushinBracket grushin_bracket(const Point& w1, const Point& w2, double C1) {
  if (!(C1 >= 1.0)) throw InvalidParameter("bracket constant C1 must be >= 1");
  GrushinBracket b;
  b.C1 = C1;
  b.core = grushin_core(w1, w2);
  b.lower = b.core / C1;
  b.upper = b.core * C1;
  return b;
}

}  // namespace dimdist
