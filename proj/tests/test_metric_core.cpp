#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dimdist/csv.hpp"
#include "dimdist/error.hpp"
#include "dimdist/net.hpp"
#include "dimdist/point.hpp"
#include "dimdist/rng.hpp"

using namespace dimdist;

namespace {

std::vector<Point> line_points(std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(euclid(x));
  return pts;
}

}  // namespace

TEST_CASE("distance: Euclidean and Heisenberg basics") {
  CHECK(distance(euclid(0.0, 0.0), euclid(3.0, 4.0)) == doctest::Approx(5.0));
  Point p = heis(0.3, -0.2, 0.7);
  CHECK(distance(p, p) == 0.0);
  CHECK(distance(heis(0, 0, 0), heis(0, 0, 1)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(distance(euclid(0.0), heis(0, 0, 0)), SpaceMismatch);
}

TEST_CASE("distance: symmetry and triangle inequality on sampled triples") {
  RngStream rng(11);
  for (int i = 0; i < 200; ++i) {
    Point a = euclid(rng.uniform(), rng.uniform());
    Point b = euclid(rng.uniform(), rng.uniform());
    Point c = euclid(rng.uniform(), rng.uniform());
    CHECK(distance(a, b) == distance(b, a));
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
  }
  for (int i = 0; i < 200; ++i) {
    Point a = heis(rng.uniform(), rng.uniform(), rng.uniform());
    Point b = heis(rng.uniform(), rng.uniform(), rng.uniform());
    Point c = heis(rng.uniform(), rng.uniform(), rng.uniform());
    CHECK(distance(a, b) == distance(b, a));
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9 * (distance(a, b) + distance(b, c)));
  }
}

TEST_CASE("maximal_separated_net: greedy scan oracles") {
  Net net = maximal_separated_net(line_points({0.0, 0.4, 1.0}), 0.5);
  REQUIRE(net.centers.size() == 2);
  CHECK(net.centers[0].x[0] == 0.0);
  CHECK(net.centers[1].x[0] == 1.0);

  Net single = maximal_separated_net(line_points({0.0, 0.4, 1.0}), 5.0);
  REQUIRE(single.centers.size() == 1);
  CHECK(single.centers[0].x[0] == 0.0);

  Net grid = maximal_separated_net(line_points({0.0, 0.25, 0.5, 0.75, 1.0}), 0.3);
  REQUIRE(grid.centers.size() == 3);
  CHECK(grid.centers[0].x[0] == 0.0);
  CHECK(grid.centers[1].x[0] == 0.5);
  CHECK(grid.centers[2].x[0] == 1.0);

  CHECK_THROWS_AS(maximal_separated_net({}, 0.5), EmptyInput);
}

TEST_CASE("maximal_separated_net: separation, covering, nesting") {
  RngStream rng(3);
  std::vector<Point> pts;
  for (int i = 0; i < 400; ++i) pts.push_back(euclid(rng.uniform(), rng.uniform()));

  Net coarse = maximal_separated_net(pts, 0.2);
  Net fine = maximal_separated_net(pts, 0.1, &coarse);

  for (const Net* net : {&coarse, &fine}) {
    for (std::size_t i = 0; i < net->centers.size(); ++i)
      for (std::size_t j = i + 1; j < net->centers.size(); ++j)
        CHECK(distance(net->centers[i], net->centers[j]) >= net->epsilon);
    for (const auto& p : pts) {
      double best = 1e18;
      for (const auto& c : net->centers) best = std::min(best, distance(p, c));
      CHECK(best <= net->epsilon);
    }
    CHECK(net->covering_radius <= net->epsilon);
  }
  // parent centers are a prefix of the refinement
  REQUIRE(fine.parent_prefix == coarse.centers.size());
  for (std::size_t i = 0; i < coarse.centers.size(); ++i)
    CHECK(fine.centers[i] == coarse.centers[i]);
}

TEST_CASE("maximal_separated_net: candidate index agrees with brute force in H^1") {
  RngStream rng(17);
  std::vector<Point> pts;
  for (int i = 0; i < 500; ++i)
    pts.push_back(heis(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
  for (double eps : {0.5, 0.11, 0.03}) {
    Net net = maximal_separated_net(pts, eps);
    // reference greedy without any index
    std::vector<Point> ref;
    for (const auto& p : pts) {
      bool sep = true;
      for (const auto& c : ref)
        if (distance(p, c) < eps) { sep = false; break; }
      if (sep) ref.push_back(p);
    }
    REQUIRE(net.centers.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(net.centers[i] == ref[i]);
  }
}

TEST_CASE("greedy_cover_count: oracles, soundness, monotonicity") {
  CHECK(greedy_cover_count({euclid(0.7)}, 0.2).count == 1);
  CHECK(greedy_cover_count(line_points({0.0, 10.0}), 1.0).count == 2);
  CHECK_THROWS_AS(greedy_cover_count(line_points({0.0}), -1.0), InvalidParameter);

  std::vector<Point> pts;
  for (int i = 0; i <= 100; ++i) pts.push_back(euclid(i / 100.0));
  auto cover = greedy_cover_count(pts, 0.25);
  CHECK(cover.count >= 2);
  CHECK(cover.count <= 5);
  CHECK(double(cover.count) * 0.25 <= 1.25);
  for (const auto& p : pts) {
    bool covered = false;
    for (const auto& b : cover.balls)
      if (distance(p, b.center) < b.radius + 1e-15) covered = true;
    CHECK(covered);
  }
  CHECK(greedy_cover_count(pts, 0.05).count >= greedy_cover_count(pts, 0.25).count);
}

TEST_CASE("ball_members: open-ball membership") {
  auto pts = line_points({0.0, 1.0, 2.0});
  CHECK(ball_members(pts, euclid(1.0), 100.0).size() == 3);
  CHECK(ball_members(pts, euclid(1.0), 1.5).size() == 3);
  auto tiny = ball_members(pts, euclid(1.0), 1e-9);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].x[0] == 1.0);
  CHECK(ball_members(pts, euclid(0.5), 1e-9).empty());
  // boundary is excluded: distance exactly 1 is not a member of B(.,1)
  CHECK(ball_members(pts, euclid(0.0), 1.0).size() == 1);
}

TEST_CASE("nets are deterministic for identical input order") {
  RngStream rng(5);
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) pts.push_back(euclid(rng.uniform(), rng.uniform()));
  Net a = maximal_separated_net(pts, 0.07);
  Net b = maximal_separated_net(pts, 0.07);
  REQUIRE(a.centers.size() == b.centers.size());
  for (std::size_t i = 0; i < a.centers.size(); ++i) CHECK(a.centers[i] == b.centers[i]);
  CHECK(a.covering_radius == b.covering_radius);
}

TEST_CASE("point CSV roundtrip") {
  std::vector<Point> pts = {euclid(0.25, -1.5), euclid(3.0, 0.1)};
  std::stringstream ss;
  write_points_csv(ss, pts);
  auto back = read_points_csv(ss);
  REQUIRE(back.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(back[i] == pts[i]);

  std::vector<Point> hp = {heis(0.1, 0.2, -0.3)};
  std::stringstream hs;
  write_points_csv(hs, hp);
  CHECK(read_points_csv(hs)[0] == hp[0]);
}
