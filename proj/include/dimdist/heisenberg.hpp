#ifndef DIMDIST_HEISENBERG_HPP
#define DIMDIST_HEISENBERG_HPP

#include "dimdist/point.hpp"

namespace dimdist {

/// H^n: points (x, t) with x in R^{2n}, group law
///   (x,t)*(x',t') = (x+x', t+t'+2w(x,x')),
/// w the standard symplectic form on R^{2n}. Homogeneous dimension 2n+2.
struct HeisenbergParams {
  int n = 1;
  int point_dim() const { return 2 * n + 1; }
  int homogeneous_dim() const { return 2 * n + 2; }
};

int heis_n(const Point& p);  // throws unless p is Heisenberg with odd dim >= 3
Point heis_identity(int n = 1);

double symplectic_form(const std::vector<double>& x, const std::vector<double>& xp, int n);

Point heis_mul(const Point& p, const Point& q);
Point heis_inverse(const Point& p);

/// Koranyi norm (||x||^4 + t^2)^{1/4}.
double koranyi_norm(const Point& p);

/// Left-invariant Koranyi metric d(p,q) = ||p^{-1} * q||.
double koranyi_dist(const Point& p, const Point& q);

/// Intrinsic dilation delta_r(x,t) = (r x, r^2 t), r > 0.
Point dilate(double r, const Point& p);

}  // namespace dimdist

#endif
