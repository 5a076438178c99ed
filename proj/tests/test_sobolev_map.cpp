#include <doctest.h>

#include <cmath>

#include "dimdist/datasets.hpp"
#include "dimdist/error.hpp"
#include "dimdist/frostman.hpp"
#include "dimdist/measure.hpp"
#include "dimdist/sobolev_map.hpp"

using namespace dimdist;

namespace {

double euclid_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

RandomSobolevMap dust_map(int n_max = 8, std::uint64_t seed = 101) {
  auto E = cantor_dust(6);
  FrostmanResult frost = frostman_measure(E, 1.0, 8);
  return build_construction(E, frost.measure, 4.0 / 3.0, 2, n_max, seed);
}

}  // namespace

TEST_CASE("single-level toy map: closed-form one-term series") {
  // diameter below the net scale -> a single ball; the map collapses to
  // x -> (1/4) * weight * psi(x) * xi
  std::vector<Point> E = {euclid(0.0, 0.0), euclid(0.3, 0.0)};
  DiscreteMeasure nu = DiscreteMeasure::make(E, {0.5, 0.5});
  RandomSobolevMap map = build_construction(E, nu, 1.0, 2, 1, 7);
  REQUIRE(map.levels.size() == 1);
  REQUIRE(map.nets[0].centers.size() == 1);

  double r = map.levels[0].radius;
  CHECK(r == 0.5);
  double w = map.levels[0].weight[0];
  CHECK(w == doctest::Approx(1.0).epsilon(1e-12));  // the big ball holds all mass

  // both sample points lie within the closed ball, where psi = 1
  for (const auto& p : E) {
    auto val = evaluate(map, p);
    for (int i = 0; i < 2; ++i)
      CHECK(val[std::size_t(i)] ==
            doctest::Approx(0.25 * w * map.levels[0].xi[0][std::size_t(i)]).epsilon(1e-12));
  }

  // far outside every support the map vanishes
  auto far = evaluate(map, euclid(1e6, 1e6));
  CHECK(euclid_norm(far) == 0.0);

  // single active ball: undamped per-level field is weight / radius
  CHECK(lip_level(map, 1, E[0]) == doctest::Approx(w / r).epsilon(1e-12));
}

TEST_CASE("construction preconditions") {
  std::vector<Point> E = {euclid(0.0), euclid(0.5)};
  DiscreteMeasure nu = DiscreteMeasure::make(E, {0.5, 0.5});
  CHECK_THROWS_AS(build_construction(E, nu, 3.0, 2, 4, 1), InvalidParameter);  // N <= alpha
  CHECK_THROWS_AS(build_construction({}, nu, 1.0, 2, 4, 1), EmptyInput);
  DiscreteMeasure zero = DiscreteMeasure::make(E, {0.0, 0.0});
  CHECK_THROWS_AS(build_construction(E, zero, 1.0, 2, 4, 1), InvalidParameter);
}

TEST_CASE("series invariants: xi norms, nesting, recomputable weights") {
  RandomSobolevMap map = dust_map();
  REQUIRE(map.levels.size() == 8);
  for (std::size_t li = 0; li < map.levels.size(); ++li) {
    for (const auto& xi : map.levels[li].xi) CHECK(euclid_norm(xi) <= 1.0 + 1e-15);
    if (li > 0) {
      REQUIRE(map.nets[li].parent_prefix == map.nets[li - 1].centers.size());
      for (std::size_t i = 0; i < map.nets[li].parent_prefix; ++i)
        CHECK(map.nets[li].centers[i] == map.nets[li - 1].centers[i]);
    }
    for (std::size_t b = 0; b < map.nets[li].centers.size(); ++b) {
      double mass = map.nu.ball_mass(map.nets[li].centers[b],
                                     map.ball_factor * map.levels[li].radius);
      double expect = mass > 0.0 ? std::pow(mass, 1.0 / map.alpha) : 0.0;
      CHECK(map.levels[li].weight[b] == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("determinism: identical seed reproduces the map bit for bit") {
  RandomSobolevMap a = dust_map(6, 99), b = dust_map(6, 99);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t li = 0; li < a.levels.size(); ++li) {
    CHECK(a.levels[li].weight == b.levels[li].weight);
    CHECK(a.levels[li].xi == b.levels[li].xi);
  }
  RandomSobolevMap c = dust_map(6, 100);
  CHECK(a.levels.back().xi != c.levels.back().xi);
}

TEST_CASE("evaluate bounded by the damped per-level max weights") {
  RandomSobolevMap map = dust_map(6);
  double cap = 0.0;
  for (const auto& level : map.levels) {
    double mx = 0.0;
    for (double w : level.weight) mx = std::max(mx, w);
    cap += mx / double((1 + level.n) * (1 + level.n));
  }
  for (const auto& p : cantor_dust(4)) CHECK(euclid_norm(evaluate(map, p)) <= cap * 4.0 + 1e-12);
}

TEST_CASE("difference quotients never beat the integrated gradient bound") {
  RandomSobolevMap map = dust_map(6);
  auto E = cantor_dust(3);
  const int steps = 64;
  for (std::size_t i = 0; i + 1 < E.size(); i += 7) {
    const Point &x = E[i], &y = E[i + 1];
    double d = distance(x, y);
    if (d == 0.0) continue;
    double integral = 0.0;
    for (int k = 0; k < steps; ++k) {
      double t = (k + 0.5) / steps;
      Point m = euclid(x.x[0] + t * (y.x[0] - x.x[0]), x.x[1] + t * (y.x[1] - x.x[1]));
      integral += lip_upper(map, m) * (d / steps);
    }
    double diff = 0.0;
    auto fx = evaluate(map, x), fy = evaluate(map, y);
    for (std::size_t c = 0; c < fx.size(); ++c) diff = std::hypot(diff, fx[c] - fy[c]);
    CHECK(diff <= integral + 1e-9);
  }
}

TEST_CASE("zeroed weights give vanishing fields, norms, and a vacuous diagnostic") {
  RandomSobolevMap map = dust_map(4);
  for (auto& level : map.levels)
    for (auto& w : level.weight) w = 0.0;
  CHECK(euclid_norm(evaluate(map, euclid(0.2, 0.2))) == 0.0);
  CHECK(lip_upper(map, euclid(0.2, 0.2)) == 0.0);
  DiscreteMeasure ambient = DiscreteMeasure::make(cantor_dust(3), std::vector<double>(64, 1.0 / 64));
  LevelNorms norms = level_lp_norms(map, 4.0, ambient);
  CHECK(norms.total == 0.0);
  MorreyReport rep = morrey_diagnostic(map, {Ball{euclid(0.1, 0.1), 0.5}}, 4.0, ambient);
  CHECK(rep.vacuous);
  CHECK(rep.sup_ratio == 0.0);
}

TEST_CASE("level ball counts grow no faster than the set dimension allows") {
  RandomSobolevMap map = dust_map();
  for (const auto& net : map.nets) {
    double r = net.epsilon;  // 2^-n after internal rescaling of the sample
    CHECK(double(net.centers.size()) <= 8.0 / r);  // ~ 2^{ns} growth, s = 1
  }
}

TEST_CASE("truncation tail bound dominates the observed one-level extension") {
  auto E = cantor_dust(5);
  FrostmanResult frost = frostman_measure(E, 1.0, 7);
  RandomSobolevMap m6 = build_construction(E, frost.measure, 4.0 / 3.0, 2, 6, 5);
  RandomSobolevMap m7 = build_construction(E, frost.measure, 4.0 / 3.0, 2, 7, 5);
  double bound = truncation_tail_bound(m6);
  double observed = 0.0;
  for (std::size_t i = 0; i < E.size(); i += 13) {
    auto a = evaluate(m6, E[i]), b = evaluate(m7, E[i]);
    double diff = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) diff = std::hypot(diff, a[c] - b[c]);
    observed = std::max(observed, diff);
  }
  CHECK(observed <= bound + 1e-12);
}

TEST_CASE("JSON bundle replays the map exactly") {
  RandomSobolevMap map = dust_map(5);
  RandomSobolevMap back = RandomSobolevMap::from_json(map.to_json());
  CHECK(back.alpha == map.alpha);
  CHECK(back.rescale == map.rescale);
  for (const auto& p : cantor_dust(3)) {
    auto a = evaluate(map, p), b = evaluate(back, p);
    CHECK(a == b);
  }
}

TEST_CASE("morrey diagnostic: finite, ball-resolution reported, empty ball rejected") {
  RandomSobolevMap map = dust_map(6);
  DiscreteMeasure ambient = frostman_measure(cantor_dust(5), 1.0, 6).measure;
  std::vector<Ball> balls = {Ball{euclid(0.1, 0.1), 0.3}, Ball{euclid(0.8, 0.8), 0.3},
                             Ball{euclid(0.5, 0.2), 0.4}};
  MorreyReport rep = morrey_diagnostic(map, balls, 4.0, ambient);
  CHECK(rep.balls_used == 3);
  CHECK_FALSE(rep.vacuous);
  CHECK(std::isfinite(rep.sup_ratio));
  CHECK(rep.sup_ratio > 0.0);
  CHECK_THROWS_AS(morrey_diagnostic(map, {Ball{euclid(50.0, 50.0), 0.01}}, 4.0, ambient),
                  InvalidParameter);
}
