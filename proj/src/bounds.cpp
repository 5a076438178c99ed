#include "dimdist/bounds.hpp"

#include <sstream>

#include "dimdist/error.hpp"

namespace dimdist {

double alpha_max(double p, double Q, double s) {
  if (!(p > Q)) throw InvalidParameter("alpha_max requires p > Q");
  if (s < 0.0 || s > Q) throw InvalidParameter("alpha_max requires 0 <= s <= Q");
  return p * s / (p - Q + s);
}

std::pair<double, double> admissible_alpha(BoundKind kind, const BoundParams& bp) {
  switch (kind) {
    case BoundKind::Universal:
      return {0.0, bp.Q};  // alpha unused; any subset dimension
    case BoundKind::Foliation:
      return {bp.s, alpha_max(bp.p, bp.Q, bp.s)};
    case BoundKind::HeisLeft:
      return {3.0, alpha_max(bp.p, 4.0, 3.0)};  // (3, 3p/(p-1)]
    case BoundKind::HeisGrushin:
      return {2.0, alpha_max(bp.p, 4.0, 2.0)};  // (2, 2p/(p-2)]
  }
  return {0.0, 0.0};
}

static void check_alpha(BoundKind kind, const BoundParams& bp) {
  auto [lo, hi] = admissible_alpha(kind, bp);
  if (!(bp.alpha > lo && bp.alpha <= hi)) {
    std::ostringstream msg;
    msg << bound_kind_name(kind) << " bound requires alpha in (" << lo << ", " << hi
        << "], got " << bp.alpha;
    throw InvalidParameter(msg.str());
  }
}

double distortion_bound(const BoundParams& bp, BoundKind kind) {
  switch (kind) {
    case BoundKind::Universal:
      return alpha_max(bp.p, bp.Q, bp.s);
    case BoundKind::Foliation:
      if (!(bp.p > bp.Q)) throw InvalidParameter("foliation bound requires p > Q");
      if (!(bp.s > 0.0 && bp.s < bp.Q))
        throw InvalidParameter("foliation bound requires 0 < s < Q");
      check_alpha(kind, bp);
      return (bp.Q - bp.s) - bp.p * (1.0 - bp.s / bp.alpha);
    case BoundKind::HeisLeft:
      if (!(bp.p > 4.0)) throw InvalidParameter("heis_left bound requires p > 4");
      check_alpha(kind, bp);
      return 1.0 - bp.p * (1.0 - 3.0 / bp.alpha);
    case BoundKind::HeisGrushin:
      if (!(bp.p > 4.0)) throw InvalidParameter("heis_grushin bound requires p > 4");
      check_alpha(kind, bp);
      return 2.0 - bp.p * (1.0 - 2.0 / bp.alpha);
  }
  throw InvalidParameter("unknown bound kind");
}

std::string bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Universal: return "universal";
    case BoundKind::Foliation: return "foliation";
    case BoundKind::HeisLeft: return "heis_left";
    case BoundKind::HeisGrushin: return "heis_grushin";
  }
  return "unknown";
}

}  // namespace dimdist
