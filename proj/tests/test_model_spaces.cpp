#include <doctest.h>

#include <cmath>

#include "dimdist/carpet.hpp"
#include "dimdist/error.hpp"
#include "dimdist/grushin.hpp"
#include "dimdist/heisenberg.hpp"
#include "dimdist/rng.hpp"

using namespace dimdist;

namespace {

Point random_h1(RngStream& rng) {
  return heis(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
}

}  // namespace

TEST_CASE("heis_mul: identity, worked product, inverse") {
  RngStream rng(2);
  Point e = heis_identity();
  for (int i = 0; i < 50; ++i) {
    Point p = random_h1(rng);
    CHECK(heis_mul(e, p) == p);
    Point q = heis_mul(p, heis_inverse(p));
    for (double c : q.x) CHECK(std::abs(c) <= 1e-15);
  }
  Point prod = heis_mul(heis(1, 0, 0), heis(0, 1, 0));
  CHECK(prod.x[0] == 1.0);
  CHECK(prod.x[1] == 1.0);
  CHECK(prod.x[2] == -2.0);
}

TEST_CASE("heis_mul: associativity on random triples") {
  RngStream rng(9);
  for (int i = 0; i < 500; ++i) {
    Point p = random_h1(rng), q = random_h1(rng), r = random_h1(rng);
    Point a = heis_mul(heis_mul(p, q), r);
    Point b = heis_mul(p, heis_mul(q, r));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(a.x[k] - b.x[k]) <= 1e-12);
  }
}

TEST_CASE("koranyi metric: horizontal/vertical norms and left invariance") {
  CHECK(koranyi_dist(heis_identity(), heis(0.7, 0, 0)) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(koranyi_dist(heis_identity(), heis(0, 0, 0.49)) == doctest::Approx(0.7).epsilon(1e-14));
  RngStream rng(13);
  for (int i = 0; i < 500; ++i) {
    Point g = random_h1(rng), p = random_h1(rng), q = random_h1(rng);
    double d0 = koranyi_dist(p, q);
    double d1 = koranyi_dist(heis_mul(g, p), heis_mul(g, q));
    CHECK(std::abs(d0 - d1) <= 1e-12 * std::max(1.0, d0));
  }
}

TEST_CASE("dilations: componentwise action and homogeneity") {
  Point d = dilate(2.0, heis(1, 1, 1));
  CHECK(d.x[0] == 2.0);
  CHECK(d.x[1] == 2.0);
  CHECK(d.x[2] == 4.0);
  CHECK(dilate(1.0, heis(0.3, 0.1, -0.2)) == heis(0.3, 0.1, -0.2));
  CHECK_THROWS_AS(dilate(-2.0, heis(0, 0, 0)), InvalidParameter);

  RngStream rng(4);
  for (int i = 0; i < 300; ++i) {
    Point p = random_h1(rng), q = random_h1(rng);
    double r = rng.uniform(0.25, 4.0);
    CHECK(koranyi_norm(dilate(r, p)) ==
          doctest::Approx(r * koranyi_norm(p)).epsilon(1e-12));
    CHECK(koranyi_dist(dilate(r, p), dilate(r, q)) ==
          doctest::Approx(r * koranyi_dist(p, q)).epsilon(1e-12));
    // dilations are group automorphisms
    Point a = dilate(r, heis_mul(p, q));
    Point b = heis_mul(dilate(r, p), dilate(r, q));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(a.x[k] - b.x[k]) <= 1e-12 * 16.0);
  }
}

TEST_CASE("grushin core: worked values and the degenerate-axis convention") {
  CHECK(grushin_core(0, 0, 0, 1) == doctest::Approx(1.0));
  CHECK(grushin_core(1, 0, 3, 0) == doctest::Approx(2.0));
  CHECK(grushin_core(2, 0, 2, 1) == doctest::Approx(0.5));
  CHECK(grushin_core(grushin_pt(0.4, 0.2), grushin_pt(0.4, 0.2)) == 0.0);
}

TEST_CASE("grushin bracket: consistency and symmetry") {
  RngStream rng(6);
  for (int i = 0; i < 300; ++i) {
    Point w1 = grushin_pt(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Point w2 = grushin_pt(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double C1 = rng.uniform(1.0, 5.0);
    GrushinBracket b = grushin_bracket(w1, w2, C1);
    CHECK(b.lower <= b.upper);
    if (b.lower > 0.0) CHECK(b.upper / b.lower == doctest::Approx(C1 * C1).epsilon(1e-12));
    GrushinBracket s = grushin_bracket(w2, w1, C1);
    CHECK(b.core == s.core);
  }
}

TEST_CASE("carpet_contains: removed centers and surviving corners") {
  CarpetSpec a3;
  a3.sequence = {3};
  CHECK_FALSE(carpet_contains(a3, 0.5, 0.5, 1));
  CHECK(carpet_contains(a3, 0.0, 0.0, 6));

  CarpetSpec a35;
  a35.sequence = {3, 5};
  CHECK_FALSE(carpet_contains(a35, 0.4, 0.4, 1));  // cell (1,1) of the 3x3 grid

  CHECK(carpet_contains(a3, 1.0, 1.0, 3));  // top/right boundary belongs to the last cell
  CHECK_THROWS_AS(carpet_contains(a3, 1.2, 0.0, 1), InvalidParameter);
}

TEST_CASE("carpet enumeration: cell counts and exact mass conservation") {
  CarpetSpec a3;
  a3.sequence = {3};
  CarpetSample depth1 = carpet_enumerate(a3, 1);
  REQUIRE(depth1.points.size() == 8);
  for (double w : depth1.measure.weights) CHECK(w == doctest::Approx(1.0 / 8).epsilon(1e-15));

  CarpetSpec def;  // a_n = 2n+1
  CarpetSample depth3 = carpet_enumerate(def, 3);
  REQUIRE(depth3.points.size() == 8 * 24 * 48);
  CHECK(depth3.measure.total_mass == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& p : depth3.points) CHECK(carpet_contains(def, p, 3));
}

TEST_CASE("carpet convergence condition for the default generator") {
  CarpetSpec def;
  auto sums = def.convergence_partial_sums(200);
  // sum (2n+1)^-2 < sum over odd squares = pi^2/8 - 1
  CHECK(sums.back() < 9.8696 / 8.0 - 1.0 + 1e-9);
  for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] >= sums[i - 1]);
}

TEST_CASE("carpet sampling: deterministic, weights normalized, cells retained") {
  CarpetSpec def;
  CarpetSample a = carpet_sample(def, 3, 500, 42);
  CarpetSample b = carpet_sample(def, 3, 500, 42);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
  CHECK(a.measure.total_mass == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& p : a.points) CHECK(carpet_contains(def, p, 3));

  // count >= total cells falls back to exhaustive enumeration
  CarpetSpec a3;
  a3.sequence = {3};
  CHECK(carpet_sample(a3, 1, 100, 7).points.size() == 8);
}

TEST_CASE("carpet spec JSON roundtrip") {
  CarpetSpec def;
  CarpetSpec back = CarpetSpec::from_json(def.to_json());
  CHECK(back.sequence == def.sequence);
  CHECK(back.max_depth == def.max_depth);

  CarpetSpec expl;
  expl.sequence = {3, 5, 7};
  expl.max_depth = 3;
  CarpetSpec back2 = CarpetSpec::from_json(expl.to_json());
  CHECK(back2.sequence == expl.sequence);

  CHECK_THROWS(CarpetSpec::from_json("{\"sequence\":[4],\"max_depth\":2}"));
}
