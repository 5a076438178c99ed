#ifndef DIMDIST_GRUSHIN_HPP
#define DIMDIST_GRUSHIN_HPP

#include "dimdist/point.hpp"

namespace dimdist {

/// Two-sided estimate for the Grushin CC distance:
///   core = max{ |u1-u2|, min{ sqrt|v1-v2|, |v1-v2| / max(|u1|,|u2|) } },
/// with the second term of the min read as +inf when u1 = u2 = 0.
/// The CC distance lies in [core/C1, C1*core] for an absolute C1 >= 1.
struct GrushinBracket {
  double core = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double C1 = 3.0;
};

double grushin_core(const Point& w1, const Point& w2);
double grushin_core(double u1, double v1, double u2, double v2);

GrushinBracket grushin_bracket(const Point& w1, const Point& w2, double C1 = 3.0);

}  // namespace dimdist

#endif
