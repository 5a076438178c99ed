#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dimdist/csv.hpp"
#include "dimdist/error.hpp"
#include "dimdist/experiments.hpp"
#include "dimdist/point.hpp"

using namespace dimdist;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string tmp_dir(const std::string& leaf) {
  auto dir = std::filesystem::temp_directory_path() / "dimdist_harness" / leaf;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("experiment config JSON roundtrip") {
  ExperimentConfig cfg;
  cfg.experiment = "grushin";
  cfg.Q = 4.0;
  cfg.s = 2.0;
  cfg.p = 6.0;
  cfg.alpha = 2.5;
  cfg.N = 3;
  cfg.n_max = 5;
  cfg.dust_depth = 4;
  cfg.carpet_depth = 2;
  cfg.chart = "carpet_vertical";
  cfg.sample_csv = "points.csv";
  cfg.ball_factor = 4.0;
  cfg.seed = 9876543210ull;
  cfg.replicates = 3;
  cfg.pair_count = 42;
  cfg.C1 = 2.5;
  cfg.out_dir = "somewhere";

  ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
  CHECK(back.experiment == cfg.experiment);
  CHECK(back.Q == cfg.Q);
  CHECK(back.s == cfg.s);
  CHECK(back.p == cfg.p);
  CHECK(back.alpha == cfg.alpha);
  CHECK(back.N == cfg.N);
  CHECK(back.n_max == cfg.n_max);
  CHECK(back.dust_depth == cfg.dust_depth);
  CHECK(back.carpet_depth == cfg.carpet_depth);
  CHECK(back.chart == cfg.chart);
  CHECK(back.sample_csv == cfg.sample_csv);
  CHECK(back.ball_factor == cfg.ball_factor);
  CHECK(back.seed == cfg.seed);
  CHECK(back.replicates == cfg.replicates);
  CHECK(back.pair_count == cfg.pair_count);
  CHECK(back.C1 == cfg.C1);
  CHECK(back.out_dir == cfg.out_dir);

  CHECK_THROWS_AS(ExperimentConfig::from_json("{not json"), ConfigError);
}

TEST_CASE("config validation names the admissible interval") {
  ExperimentConfig cfg;  // Q=2, s=1, p=4 -> alpha in (1, 4/3]
  cfg.alpha = 2.0;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("admissible interval (1"),
                       ConfigError);

  ExperimentConfig unknown;
  unknown.experiment = "frobnicate";
  CHECK_THROWS_WITH_AS(unknown.validate(), doctest::Contains("unknown experiment"),
                       ConfigError);

  ExperimentConfig smallN;
  smallN.N = 1;  // alpha_max = 4/3 > 1
  CHECK_THROWS_AS(smallN.validate(), ConfigError);

  ExperimentConfig subcrit;
  subcrit.p = 1.5;  // p <= Q
  CHECK_THROWS_AS(subcrit.validate(), ConfigError);

  ExperimentConfig ok;
  ok.alpha = 4.0 / 3.0;
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("report serialization is byte-stable modulo wall time") {
  Report a;
  a.experiment = "demo";
  a.config_json = "{}";
  a.checks.push_back(CheckResult{"x", 1.0, 2.0, 0.5, "analytic", true});
  Report b = a;
  a.wall_seconds = 0.001;
  b.wall_seconds = 123.456;
  CHECK(a.to_json() == b.to_json());
  CHECK(a.all_pass());
  a.checks.push_back(CheckResult{"y", 9.0, 2.0, 0.5, "derived", false});
  CHECK_FALSE(a.all_pass());
}

TEST_CASE("grushin comparison: same seed reproduces the CSV byte for byte") {
  std::string dir_a = tmp_dir("grushin_a");
  std::string dir_b = tmp_dir("grushin_b");

  ExperimentConfig cfg;
  cfg.experiment = "grushin";
  cfg.pair_count = 200;
  cfg.seed = 314;
  cfg.out_dir = dir_a;
  Report first = run_experiment(cfg);
  CHECK(first.all_pass());

  cfg.out_dir = dir_b;
  Report second = run_experiment(cfg);
  CHECK(slurp(dir_a + "/grushin_pairs.csv") == slurp(dir_b + "/grushin_pairs.csv"));
  CHECK(first.to_json() != second.to_json());  // out_dir differs in the config echo
  first.config_json = second.config_json;
  CHECK(first.to_json() == second.to_json());
}

TEST_CASE("sharpness on a degenerate sample reports the constant-map fallback") {
  std::string dir = tmp_dir("degenerate");
  std::string sample = dir + "/one_point.csv";
  write_points_csv(sample, {euclid(0.5, 0.5)});

  ExperimentConfig cfg;
  cfg.experiment = "sharpness";
  cfg.sample_csv = sample;
  cfg.out_dir = dir;
  Report rep = run_experiment(cfg);
  CHECK(rep.all_pass());
  CHECK(rep.metrics_json.find("degenerate") != std::string::npos);
  CHECK(std::filesystem::exists(dir + "/report.json"));
}
