#ifndef DIMDIST_BOUNDS_HPP
#define DIMDIST_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>

namespace dimdist {

/// Parameters of the closed-form distortion bounds. Q is the homogeneous
/// dimension of the ambient space, s the (leaf or subset) dimension, p the
/// Sobolev exponent, alpha the target dimension. s_hat optionally holds the
/// supremal leaf dimension when it is smaller than the foliation exponent.
struct BoundParams {
  double Q = 0.0;
  double s = 0.0;
  double p = 0.0;
  double alpha = 0.0;
  std::optional<double> s_hat;
};

enum class BoundKind {
  Universal,    // dim f(E) <= p s / (p - Q + s), s = dim E
  Foliation,    // (Q - s) - p (1 - s/alpha)
  HeisLeft,     // 1 - p (1 - 3/alpha)   (H^1, V horizontal line, Q=4, s=3)
  HeisGrushin,  // 2 - p (1 - 2/alpha)   (H^1 -> Grushin right cosets, Q=4, s=2)
};

/// Largest admissible alpha: p s / (p - Q + s).
double alpha_max(double p, double Q, double s);

/// Admissible alpha interval (lo, hi] for the foliation-type bounds.
std::pair<double, double> admissible_alpha(BoundKind kind, const BoundParams& bp);

/// Closed-form bound value. Throws InvalidParameter naming the admissible
/// interval when alpha is out of range.
double distortion_bound(const BoundParams& bp, BoundKind kind);

std::string bound_kind_name(BoundKind kind);

}  // namespace dimdist

#endif
