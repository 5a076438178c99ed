#ifndef DIMDIST_SOBOLEV_MAP_HPP
#define DIMDIST_SOBOLEV_MAP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dimdist/measure.hpp"
#include "dimdist/net.hpp"

namespace dimdist {

/// One level of the random series: the scale-2^-n net, the per-ball
/// Frostman weights nu(100B)^{1/alpha}, and the per-ball random vectors
/// xi_B in the closed unit ball of R^N.
struct SobolevMapLevel {
  int n = 0;
  double radius = 0.0;                   // 2^-n
  std::vector<double> weight;            // nu(100B)^{1/alpha} per net center
  std::vector<std::vector<double>> xi;   // per net center, |xi| <= 1
};

/// The random Sobolev map f_xi built from nested maximal separated nets:
///   f_xi = sum_n (1+n)^{-2} sum_{B in level n} nu(100B)^{1/alpha} psi_B xi_B
/// with bump psi_B(x) = clamp(2 - d(x,c_B)/r_B, 0, 1), so psi_B = 1 on the
/// closed ball and supp psi_B lies in 2B, with Lipschitz constant 1/r_B.
struct RandomSobolevMap {
  double alpha = 0.0;
  int N = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  double ball_factor = 100.0;  // the "100" in nu(100B); configurable
  double rescale = 1.0;        // input coordinates are multiplied by this
  std::vector<Net> nets;       // nested, scales 2^-1 .. 2^-n_max
  std::vector<SobolevMapLevel> levels;
  DiscreteMeasure nu;          // the (rescaled) Frostman measure used

  std::string to_json() const;
  static RandomSobolevMap from_json(const std::string& text);
};

/// Builds the construction. Requires N > alpha and a nonzero measure
/// supported on the sample. Samples with diameter >= 1 are rescaled
/// internally (recorded in `rescale`); evaluation applies the same scaling,
/// so callers keep working in original coordinates.
RandomSobolevMap build_construction(const std::vector<Point>& E_sample,
                                    const DiscreteMeasure& nu, double alpha, int N,
                                    int n_max, std::uint64_t seed,
                                    double ball_factor = 100.0);

/// Truncated series value in R^N.
std::vector<double> evaluate(const RandomSobolevMap& map, const Point& x);

/// Analytic upper bound for the pointwise Lipschitz constant of the
/// truncated series: sum over levels and active balls of the damped
/// weight/r_B contributions. An upper gradient for the truncated f_xi.
double lip_upper(const RandomSobolevMap& map, const Point& x);

/// Undamped per-level field Lip f_{xi,n} at x.
double lip_level(const RandomSobolevMap& map, int n, const Point& x);

struct LevelNorms {
  std::vector<double> per_level;  // ||Lip f_{xi,n}||_p, n = 1..n_max
  double total = 0.0;             // quadrature estimate of ||Lip f_xi||_p
};

/// L^p quadrature of the gradient fields against a reference measure on the
/// ambient space (Lebesgue grid weights or the carpet natural measure).
LevelNorms level_lp_norms(const RandomSobolevMap& map, double p,
                          const DiscreteMeasure& ambient);

/// Tail bound for the truncation: sum_{n > n_max} (1+n)^{-2} max-weight.
double truncation_tail_bound(const RandomSobolevMap& map);

struct MorreyReport {
  double sup_ratio = 0.0;
  std::size_t balls_used = 0;
  bool vacuous = false;  // gradient vanished on every sampled ball
};

/// sup over balls of diam f(B) / (diam B * (avg_B lip_upper^p)^{1/p}),
/// image diameters estimated from the ambient sample points inside each
/// ball. Balls with no sample points raise InvalidParameter.
MorreyReport morrey_diagnostic(const RandomSobolevMap& map, const std::vector<Ball>& balls,
                               double p, const DiscreteMeasure& ambient);

}  // namespace dimdist

#endif
