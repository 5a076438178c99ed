#ifndef DIMDIST_EXPERIMENTS_HPP
#define DIMDIST_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dimdist {

/// Configuration shared by all experiments; unused fields are ignored by
/// experiments that do not need them. Validated against the admissible
/// parameter ranges of the closed-form bounds before any compute.
struct ExperimentConfig {
  std::string experiment = "sharpness";  // sharpness | universal | survey |
                                         // regularity | grushin | carpet
  double Q = 2.0;
  double s = 1.0;
  double p = 4.0;
  double alpha = 0.0;  // 0 selects alpha_max(p, Q, s)
  int N = 2;
  int n_max = 8;
  int dust_depth = 6;       // planar Cantor dust depth for E
  int carpet_depth = 4;
  std::string chart = "heis_right";
  std::string sample_csv;   // optional external E sample
  // Dilation factor b in the nu(bB) weights (100 verbatim). Scaling
  // studies that need nu(bB) to follow (br)^s across levels should lower
  // it: at desk scale 100 * 2^-n exceeds the sample diameter on every
  // level, so the default saturates all weights at nu(X).
  double ball_factor = 100.0;
  std::uint64_t seed = 1;
  int replicates = 5;
  std::size_t pair_count = 1000;  // grushin comparison pairs
  double C1 = 3.0;
  std::string out_dir = ".";

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
  void validate() const;  // throws ConfigError with the admissible interval
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double reference = 0.0;  // bound or target the value is compared against
  double tolerance = 0.0;
  std::string provenance;  // "analytic" | "golden" | "derived"
  bool pass = false;
};

struct Report {
  std::string experiment;
  std::string config_json;
  std::vector<CheckResult> checks;
  std::string metrics_json;  // experiment-specific diagnostics
  std::vector<std::string> csv_files;  // emitted raw data, relative to out_dir
  double wall_seconds = 0.0;
  std::string version = "dimdist 1.0";

  bool all_pass() const;
  /// Byte-stable modulo the wall_seconds field.
  std::string to_json() const;
  void write(const std::string& out_dir) const;  // report.json
};

Report run_sharpness(const ExperimentConfig& cfg);
Report run_universal_bound(const ExperimentConfig& cfg);
Report run_foliation_survey(const ExperimentConfig& cfg);
Report run_regularity(const ExperimentConfig& cfg);
Report run_grushin_compare(const ExperimentConfig& cfg);
Report run_carpet_regularity(const ExperimentConfig& cfg);

/// Dispatch on cfg.experiment.
Report run_experiment(const ExperimentConfig& cfg);

}  // namespace dimdist

#endif
