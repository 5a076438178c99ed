#include "dimdist/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dimdist/bounds.hpp"
#include "dimdist/boxdim.hpp"
#include "dimdist/carpet.hpp"
#include "dimdist/csv.hpp"
#include "dimdist/datasets.hpp"
#include "dimdist/error.hpp"
#include "dimdist/foliation.hpp"
#include "dimdist/frostman.hpp"
#include "dimdist/heisenberg.hpp"
#include "dimdist/measure.hpp"
#include "dimdist/quotient.hpp"
#include "dimdist/regularity.hpp"
#include "dimdist/rng.hpp"
#include "dimdist/sobolev_map.hpp"
#include "dimdist/tolerances.hpp"

namespace dimdist {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<Point> image_points(const RandomSobolevMap& map, const std::vector<Point>& E) {
  std::vector<Point> out;
  out.reserve(E.size());
  for (const auto& p : E) out.push_back(euclid(evaluate(map, p)));
  return out;
}

DiscreteMeasure lebesgue_grid(int per_side) {
  std::vector<Point> atoms;
  std::vector<double> w;
  atoms.reserve(std::size_t(per_side) * per_side);
  double mass = 1.0 / (double(per_side) * per_side);
  for (int i = 0; i < per_side; ++i)
    for (int j = 0; j < per_side; ++j) {
      atoms.push_back(euclid((i + 0.5) / per_side, (j + 0.5) / per_side));
      w.push_back(mass);
    }
  return DiscreteMeasure::make(std::move(atoms), std::move(w));
}

CheckResult check_le(const std::string& name, double value, double bound, double tolerance,
                     const std::string& prov) {
  return CheckResult{name, value, bound, tolerance, prov, value <= bound + tolerance};
}

CheckResult check_ge(const std::string& name, double value, double bound, double tolerance,
                     const std::string& prov) {
  return CheckResult{name, value, bound, tolerance, prov, value >= bound - tolerance};
}

std::vector<Point> load_E(const ExperimentConfig& cfg) {
  if (!cfg.sample_csv.empty()) return read_points_csv_file(cfg.sample_csv);
  return cantor_dust(cfg.dust_depth);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void emit_boxcounts(const std::string& path, const std::vector<DimensionEstimate>& ests) {
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < ests.size(); ++k)
    for (std::size_t i = 0; i < ests[k].scales.size(); ++i)
      rows.push_back({double(k), ests[k].scales[i], double(ests[k].counts[i])});
  write_table_csv(path, {"replicate", "r", "count"}, rows);
}

}  // namespace

std::string ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["Q"] = Q;
  j["s"] = s;
  j["p"] = p;
  j["alpha"] = alpha;
  j["N"] = N;
  j["n_max"] = n_max;
  j["dust_depth"] = dust_depth;
  j["carpet_depth"] = carpet_depth;
  j["chart"] = chart;
  j["sample_csv"] = sample_csv;
  j["seed"] = seed;
  j["replicates"] = replicates;
  j["pair_count"] = pair_count;
  j["ball_factor"] = ball_factor;
  j["C1"] = C1;
  j["out_dir"] = out_dir;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
  };
  get("experiment", cfg.experiment);
  get("Q", cfg.Q);
  get("s", cfg.s);
  get("p", cfg.p);
  get("alpha", cfg.alpha);
  get("N", cfg.N);
  get("n_max", cfg.n_max);
  get("dust_depth", cfg.dust_depth);
  get("carpet_depth", cfg.carpet_depth);
  get("chart", cfg.chart);
  get("sample_csv", cfg.sample_csv);
  get("seed", cfg.seed);
  get("replicates", cfg.replicates);
  get("pair_count", cfg.pair_count);
  get("ball_factor", cfg.ball_factor);
  get("C1", cfg.C1);
  get("out_dir", cfg.out_dir);
  return cfg;
}

void ExperimentConfig::validate() const {
  static const char* names[] = {"sharpness", "universal", "survey",
                                "regularity", "grushin", "carpet"};
  if (std::find(std::begin(names), std::end(names), experiment) == std::end(names))
    throw ConfigError("unknown experiment: " + experiment);
  if (!(p > Q)) throw ConfigError("requires p > Q");
  if (!(s > 0.0 && s <= Q)) throw ConfigError("requires 0 < s <= Q");
  if (alpha != 0.0) {
    double hi = alpha_max(p, Q, s);
    if (!(alpha > s && alpha <= hi)) {
      std::ostringstream msg;
      msg << "alpha " << alpha << " outside the admissible interval (" << s << ", " << hi
          << "]";
      throw ConfigError(msg.str());
    }
  }
  if (replicates < 1) throw ConfigError("replicates must be >= 1");
  if (n_max < 1) throw ConfigError("n_max must be >= 1");
  if (double(N) <= (alpha == 0.0 ? alpha_max(p, Q, s) : alpha))
    throw ConfigError("N must exceed the target dimension alpha");
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["config"] = nlohmann::json::parse(config_json);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["value"] = c.value;
    cj["reference"] = c.reference;
    cj["tolerance"] = c.tolerance;
    cj["provenance"] = c.provenance;
    cj["pass"] = c.pass;
    j["checks"].push_back(std::move(cj));
  }
  j["metrics"] = metrics_json.empty() ? nlohmann::json::object()
                                      : nlohmann::json::parse(metrics_json);
  j["csv_files"] = csv_files;
  j["version"] = version;
  return j.dump(2);
}

void Report::write(const std::string& out_dir) const {
  std::filesystem::create_directories(out_dir);
  // the timing is recorded in the file but kept out of to_json so reruns
  // serialize identically
  nlohmann::json j = nlohmann::json::parse(to_json());
  j["wall_seconds"] = wall_seconds;
  std::ofstream os(out_dir + "/report.json");
  os << j.dump(2) << '\n';
}

Report run_sharpness(const ExperimentConfig& cfg) {
  Timer timer;
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  Report rep;
  rep.experiment = "sharpness";
  rep.config_json = cfg.to_json();

  std::vector<Point> E = load_E(cfg);
  double alpha = cfg.alpha == 0.0 ? alpha_max(cfg.p, cfg.Q, cfg.s) : cfg.alpha;
  FrostmanResult frost = frostman_measure(E, cfg.s, cfg.n_max);

  nlohmann::json metrics;
  metrics["alpha"] = alpha;
  metrics["frostman_C"] = frost.audited_C;

  if (frost.degenerate || frost.measure.total_mass == 0.0) {
    rep.checks.push_back(CheckResult{"degenerate measure flagged: constant map, image dim 0",
                                     0.0, 0.0, 0.0, "analytic", true});
    metrics["degenerate"] = true;
    rep.metrics_json = metrics.dump();
    rep.wall_seconds = timer.seconds();
    rep.write(cfg.out_dir);
    return rep;
  }

  std::vector<double> estimates;
  std::vector<DimensionEstimate> fits;
  for (int k = 0; k < cfg.replicates; ++k) {
    RandomSobolevMap map = build_construction(E, frost.measure, alpha, cfg.N, cfg.n_max,
                                              cfg.seed + std::uint64_t(k), cfg.ball_factor);
    std::vector<Point> image = image_points(map, E);
    // The truncated series is smooth below the finest active level, whose
    // image scale is the damped finest weight; regressing past it would
    // only see the truncation artifact (slope 1), so the scale window for
    // the image stops there.
    double finest = std::pow(cfg.ball_factor * std::ldexp(1.0, -cfg.n_max),
                             cfg.s / alpha) /
                    double((1 + cfg.n_max) * (1 + cfg.n_max));
    double r_max = diameter(image) / 4.0;
    DimensionEstimate est =
        r_max > 2.0 * finest
            ? box_dimension(image, geometric_scales(r_max, finest, 0.5))
            : box_dimension(image);
    estimates.push_back(est.value);
    fits.push_back(std::move(est));
    if (k == 0) {
      write_points_csv(cfg.out_dir + "/image_sample.csv", image);
      rep.csv_files.push_back("image_sample.csv");
      LevelNorms norms = level_lp_norms(map, cfg.p, lebesgue_grid(96));
      std::vector<std::vector<double>> rows;
      for (std::size_t n = 0; n < norms.per_level.size(); ++n)
        rows.push_back({double(n + 1), norms.per_level[n]});
      write_table_csv(cfg.out_dir + "/level_norms.csv", {"n", "lp_norm"}, rows);
      rep.csv_files.push_back("level_norms.csv");
    }
  }
  emit_boxcounts(cfg.out_dir + "/image_boxcounts.csv", fits);
  rep.csv_files.push_back("image_boxcounts.csv");

  double med = median(estimates);
  metrics["estimates"] = estimates;
  metrics["median"] = med;
  rep.metrics_json = metrics.dump();
  rep.checks.push_back(check_ge("median image dimension >= alpha (sharpness)", med, alpha,
                                tol::kDimension, "derived"));
  rep.checks.push_back(check_le("median image dimension <= alpha (universal bound)", med,
                                alpha, tol::kDimension, "derived"));
  rep.wall_seconds = timer.seconds();
  rep.write(cfg.out_dir);
  return rep;
}

Report run_universal_bound(const ExperimentConfig& cfg) {
  Timer timer;
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  Report rep;
  rep.experiment = "universal";
  rep.config_json = cfg.to_json();
  nlohmann::json metrics;
  std::vector<DimensionEstimate> fits;

  // Identity map on E: dimension preserved, bound >= s always since p > Q.
  std::vector<Point> E = load_E(cfg);
  double bound = alpha_max(cfg.p, cfg.Q, cfg.s);
  DimensionEstimate id_est = box_dimension(E);
  fits.push_back(id_est);
  metrics["identity_dim"] = id_est.value;
  rep.checks.push_back(check_le("identity map respects the bound", id_est.value, bound,
                                tol::kDimension, "analytic"));

  // Radial Hoelder map x -> |x|^{beta-1} x with beta = 1/2 on a circle
  // through the origin; gradient in L^p for p = 3.9 < Q/(1-beta) = 4.
  {
    double beta = 0.5, pr = 3.9;
    std::vector<Point> circle;
    for (int i = 0; i < 2000; ++i) {
      double th = 2.0 * 3.14159265358979323846 * i / 2000.0;
      circle.push_back(euclid(0.5 + 0.5 * std::cos(th), 0.5 * std::sin(th)));
    }
    std::vector<Point> image;
    for (const auto& q : circle) {
      double nrm = std::hypot(q.x[0], q.x[1]);
      double f = nrm > 0.0 ? std::pow(nrm, beta - 1.0) : 0.0;
      image.push_back(euclid(f * q.x[0], f * q.x[1]));
    }
    DimensionEstimate est = box_dimension(image);
    fits.push_back(est);
    double rb = alpha_max(pr, cfg.Q, 1.0);
    metrics["radial_dim"] = est.value;
    metrics["radial_bound"] = rb;
    rep.checks.push_back(
        check_le("radial Hoelder map respects the bound", est.value, rb, tol::kDimension,
                 "derived"));
  }

  // The constructed random map: image dimension pinned to alpha from both
  // sides, testing tightness of the bound and of the construction at once.
  {
    ExperimentConfig sub = cfg;
    sub.out_dir = cfg.out_dir + "/sharpness";
    Report sharp = run_sharpness(sub);
    double med = nlohmann::json::parse(sharp.metrics_json)["median"].get<double>();
    double alpha = alpha_max(cfg.p, cfg.Q, cfg.s);
    metrics["construction_median"] = med;
    rep.checks.push_back(check_ge("construction reaches the bound", med, alpha,
                                  tol::kDimension, "derived"));
    rep.checks.push_back(check_le("construction respects the bound", med, alpha,
                                  tol::kDimension, "derived"));
  }

  emit_boxcounts(cfg.out_dir + "/universal_boxcounts.csv", fits);
  rep.csv_files.push_back("universal_boxcounts.csv");
  rep.metrics_json = metrics.dump();
  rep.wall_seconds = timer.seconds();
  rep.write(cfg.out_dir);
  return rep;
}

Report run_foliation_survey(const ExperimentConfig& cfg) {
  Timer timer;
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  Report rep;
  rep.experiment = "survey";
  rep.config_json = cfg.to_json();
  nlohmann::json metrics;
  std::vector<std::vector<double>> rows;  // param index, leaf dim

  if (cfg.chart == "carpet_vertical") {
    FoliationChart chart;
    chart.kind = ChartKind::CarpetVertical;
    chart.carpet_depth = cfg.carpet_depth;
    double step = chart.carpet.cell_side(cfg.carpet_depth);
    std::vector<double> vgrid;
    for (double v = step / 2.0; v < 1.0; v += step) vgrid.push_back(v);
    std::vector<double> exceptional;
    double alpha_thr = cfg.alpha == 0.0 ? 1.1 : cfg.alpha;
    for (int i = 1; i < 16; ++i) {
      double a = i / 16.0;
      auto leaf = leaf_sample(chart, euclid(a), vgrid);
      if (leaf.size() < 2) continue;
      // Lipschitz test map: dimension cannot increase.
      std::vector<Point> image;
      for (const auto& q : leaf) image.push_back(euclid(q.x[0] + 0.3 * std::sin(q.x[1]), q.x[1]));
      DimensionEstimate est = box_dimension(image);
      rows.push_back({a, est.value});
      if (est.value >= alpha_thr) exceptional.push_back(a);
    }
    metrics["exceptional_count"] = exceptional.size();
    rep.checks.push_back(CheckResult{"Lipschitz map has empty exceptional set",
                                     double(exceptional.size()), 0.0, 0.0, "analytic",
                                     exceptional.empty()});
  } else {
    FoliationChart chart;
    chart.kind = ChartKind::HeisRight;
    std::vector<double> xgrid;
    for (int i = 0; i <= 1500; ++i) xgrid.push_back(i / 1500.0);
    double alpha_thr = cfg.alpha == 0.0 ? 2.5 : cfg.alpha;
    BoundParams bp{4.0, 2.0, cfg.p > 4.0 ? cfg.p : 5.0, alpha_thr, {}};
    double bound = distortion_bound(bp, BoundKind::HeisGrushin);
    std::vector<double> exceptional;
    int pi = 0;
    for (double u : {0.2, 0.35, 0.5}) {
      for (double v : {-0.05, 0.0, 0.05}) {
        auto leaf = leaf_sample(chart, grushin_pt(u, v), xgrid);
        DimensionEstimate est = box_dimension(leaf);
        rows.push_back({double(pi++), est.value});
        if (est.value >= alpha_thr) exceptional.push_back(u);
      }
    }
    DimensionEstimate exc_dim;
    if (!exceptional.empty()) {
      std::vector<Point> pts;
      for (double u : exceptional) pts.push_back(euclid(u));
      exc_dim = box_dimension(pts);
    }
    metrics["exceptional_dim"] = exc_dim.value;
    metrics["bound"] = bound;
    rep.checks.push_back(check_le("exceptional parameter dimension respects the bound",
                                  exc_dim.value, bound, tol::kExceptionalDim, "derived"));

    // Right endpoint of the admissible interval: the same formula through
    // two code paths must agree exactly.
    double pe = bp.p;
    double a_end = 2.0 * pe / (pe - 2.0);
    BoundParams bpe{4.0, 2.0, pe, a_end, {}};
    double lhs = distortion_bound(bpe, BoundKind::HeisGrushin);
    double rhs = 2.0 - pe * (1.0 - 2.0 / a_end);
    rep.checks.push_back(CheckResult{"endpoint bound evaluator agreement",
                                     std::abs(lhs - rhs), 0.0, tol::kExact, "analytic",
                                     std::abs(lhs - rhs) <= tol::kExact});
  }

  write_table_csv(cfg.out_dir + "/survey_leaves.csv", {"param", "leaf_dim"}, rows);
  rep.csv_files.push_back("survey_leaves.csv");
  rep.metrics_json = metrics.dump();
  rep.wall_seconds = timer.seconds();
  rep.write(cfg.out_dir);
  return rep;
}

Report run_regularity(const ExperimentConfig& cfg) {
  Timer timer;
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  Report rep;
  rep.experiment = "regularity";
  rep.config_json = cfg.to_json();

  FoliationChart chart;
  chart.kind = chart_from_name(cfg.chart == "regularity" ? "heis_right" : cfg.chart);
  chart.carpet_depth = cfg.carpet_depth;
  double s = chart.regularity_exponent();

  RegularityConfig rcfg;
  rcfg.seed = cfg.seed;
  rcfg.carpet_depth = cfg.carpet_depth;
  std::vector<double> r_grid = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  RegularityTable table = ds_regularity_table(chart, s, r_grid, rcfg);

  std::string csv = "regularity_" + chart_name(chart.kind) + ".csv";
  write_regularity_csv(cfg.out_dir + "/" + csv, table);
  rep.csv_files.push_back(csv);

  nlohmann::json metrics;
  metrics["window_ratio"] = table.window_ratio();
  metrics["s"] = s;
  rep.metrics_json = metrics.dump();
  rep.checks.push_back(check_le("normalized covering counts stay in the window",
                                table.window_ratio(), tol::kRegularityWindow, 0.0,
                                "golden"));
  rep.wall_seconds = timer.seconds();
  rep.write(cfg.out_dir);
  return rep;
}

Report run_grushin_compare(const ExperimentConfig& cfg) {
  Timer timer;
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  Report rep;
  rep.experiment = "grushin";
  rep.config_json = cfg.to_json();

  RngStream rng(cfg.seed);
  std::vector<std::vector<double>> rows;
  double worst = 1.0;
  for (std::size_t i = 0; i < cfg.pair_count; ++i) {
    Point a1 = heis(0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    Point a2 = heis(0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    QuotientDistance qd = coset_quotient_distance(a1, a2, 0.0, cfg.C1);
    if (qd.bracket.core <= 1e-12) continue;
    double ratio = qd.value / qd.bracket.core;
    worst = std::max(worst, std::max(ratio, 1.0 / ratio));
    rows.push_back({a1.x[1], a1.x[2], a2.x[1], a2.x[2], qd.value, qd.bracket.core, ratio});
  }
  write_table_csv(cfg.out_dir + "/grushin_pairs.csv",
                  {"y1", "t1", "y2", "t2", "quotient", "core", "ratio"}, rows);
  rep.csv_files.push_back("grushin_pairs.csv");

  nlohmann::json metrics;
  metrics["C1_prime"] = worst;
  metrics["pairs"] = rows.size();
  rep.metrics_json = metrics.dump();
  rep.checks.push_back(check_le("quotient distance comparable to the two-sided core",
                                worst, tol::kGrushinRatio, 0.0, "golden"));
  rep.wall_seconds = timer.seconds();
  rep.write(cfg.out_dir);
  return rep;
}

Report run_carpet_regularity(const ExperimentConfig& cfg) {
  Timer timer;
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  Report rep;
  rep.experiment = "carpet";
  rep.config_json = cfg.to_json();

  CarpetSpec spec;  // default generator a_n = 2n+1
  CarpetSample sample = carpet_enumerate(spec, cfg.carpet_depth);

  // measure(B(x,r)) / r^2 across two decades of r, centers strided through
  // the enumeration.
  std::vector<double> radii;
  for (double r = 0.25; r >= 0.0025; r /= 2.0) radii.push_back(r);
  std::vector<std::vector<double>> rows;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  std::size_t stride = std::max<std::size_t>(1, sample.points.size() / 24);
  for (std::size_t i = 0; i < sample.points.size(); i += stride) {
    for (double r : radii) {
      double ratio = sample.measure.ball_mass(sample.points[i], r) / (r * r);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      rows.push_back({sample.points[i].x[0], sample.points[i].x[1], r, ratio});
    }
  }
  write_table_csv(cfg.out_dir + "/carpet_regularity.csv", {"x", "y", "r", "ratio"}, rows);
  rep.csv_files.push_back("carpet_regularity.csv");

  nlohmann::json metrics;
  metrics["ratio_min"] = lo;
  metrics["ratio_max"] = hi;
  auto sums = spec.convergence_partial_sums(64);
  metrics["convergence_partial_sum"] = sums.back();
  rep.metrics_json = metrics.dump();
  double C = tol::kCarpetRegularity;
  bool pass = lo >= 1.0 / C && hi <= C;
  rep.checks.push_back(CheckResult{"ball-mass ratios within the 2-regularity window",
                                   hi, C, 0.0, "golden", pass});
  rep.wall_seconds = timer.seconds();
  rep.write(cfg.out_dir);
  return rep;
}

Report run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment == "sharpness") return run_sharpness(cfg);
  if (cfg.experiment == "universal") return run_universal_bound(cfg);
  if (cfg.experiment == "survey") return run_foliation_survey(cfg);
  if (cfg.experiment == "regularity") return run_regularity(cfg);
  if (cfg.experiment == "grushin") return run_grushin_compare(cfg);
  return run_carpet_regularity(cfg);
}

}  // namespace dimdist
