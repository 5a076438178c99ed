#include "dimdist/heisenberg.hpp"

#include <cmath>

#include "dimdist/error.hpp"

namespace dimdist {

int heis_n(const Point& p) {
  if (p.space != Space::Heisenberg)
    throw SpaceMismatch("expected heisenberg point, got " + space_name(p.space));
  if (p.x.size() < 3 || p.x.size() % 2 == 0)
    throw InvalidParameter("heisenberg point needs 2n+1 coordinates");
  return int((p.x.size() - 1) / 2);
}

Point heis_identity(int n) {
  Point p;
  p.space = Space::Heisenberg;
  p.x.assign(2 * std::size_t(n) + 1, 0.0);
  return p;
}

double symplectic_form(const std::vector<double>& x, const std::vector<double>& xp, int n) {
  double w = 0.0;
  for (int i = 0; i < n; ++i) w += x[n + i] * xp[i] - x[i] * xp[n + i];
  return w;
}

static void check_pair(const Point& p, const Point& q) {
  int n = heis_n(p);
  if (heis_n(q) != n) throw SpaceMismatch("heisenberg dimensions differ");
}

Point heis_mul(const Point& p, const Point& q) {
  check_pair(p, q);
  int n = heis_n(p);
  Point r = heis_identity(n);
  for (int i = 0; i < 2 * n; ++i) r.x[i] = p.x[i] + q.x[i];
  r.x[2 * n] = p.x[2 * n] + q.x[2 * n] + 2.0 * symplectic_form(p.x, q.x, n);
  return r;
}

Point heis_inverse(const Point& p) {
  int n = heis_n(p);
  Point r = p;
  for (int i = 0; i <= 2 * n; ++i) r.x[i] = -r.x[i];
  return r;
}

double koranyi_norm(const Point& p) {
  int n = heis_n(p);
  double xx = 0.0;
  for (int i = 0; i < 2 * n; ++i) xx += p.x[i] * p.x[i];
  double t = p.x[2 * n];
  return std::pow(xx * xx + t * t, 0.25);
}

double koranyi_dist(const Point& p, const Point& q) {
  return koranyi_norm(heis_mul(heis_inverse(p), q));
}

Point dilate(double r, const Point& p) {
  if (!(r > 0.0)) throw InvalidParameter("dilation factor must be positive");
  int n = heis_n(p);
  Point out = p;
  for (int i = 0; i < 2 * n; ++i) out.x[i] *= r;
  out.x[2 * n] *= r * r;
  return out;
}

}  // namespace dimdist
