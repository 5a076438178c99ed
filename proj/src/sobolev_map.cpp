#include "dimdist/sobolev_map.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "dimdist/error.hpp"
#include "dimdist/heisenberg.hpp"
#include "dimdist/rng.hpp"

namespace dimdist {

namespace {

Point scale_point(const Point& p, double factor) {
  if (factor == 1.0) return p;
  if (p.space == Space::Heisenberg) return dilate(factor, p);
  Point q = p;
  for (auto& c : q.x) c *= factor;
  return q;
}

double damping(int n) { return 1.0 / double((1 + n) * (1 + n)); }

double bump(double dist, double r) {
  return std::clamp(2.0 - dist / r, 0.0, 1.0);
}

}  // namespace

RandomSobolevMap build_construction(const std::vector<Point>& E_sample,
                                    const DiscreteMeasure& nu, double alpha, int N,
                                    int n_max, std::uint64_t seed, double ball_factor) {
  if (E_sample.empty()) throw EmptyInput("build_construction");
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
  if (!(double(N) > alpha))
    throw InvalidParameter("N must exceed alpha (series vectors live in R^N)");
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  if (!(nu.total_mass > 0.0)) throw InvalidParameter("measure has zero total mass");

  RandomSobolevMap map;
  map.alpha = alpha;
  map.N = N;
  map.n_max = n_max;
  map.seed = seed;
  map.ball_factor = ball_factor;

  double diam = diameter(E_sample);
  std::vector<Point> sample = E_sample;
  DiscreteMeasure nu_scaled = nu;
  if (diam >= 1.0) {
    map.rescale = 0.98 / diam;
    for (auto& p : sample) p = scale_point(p, map.rescale);
    for (auto& a : nu_scaled.atoms) a = scale_point(a, map.rescale);
  }
  map.nu = std::move(nu_scaled);

  CounterRng root(seed);
  for (int n = 1; n <= n_max; ++n) {
    double eps = std::ldexp(1.0, -n);
    const Net* seed_net = map.nets.empty() ? nullptr : &map.nets.back();
    map.nets.push_back(maximal_separated_net(sample, eps, seed_net));

    SobolevMapLevel level;
    level.n = n;
    level.radius = eps;
    const auto& centers = map.nets.back().centers;
    level.weight.reserve(centers.size());
    level.xi.reserve(centers.size());
    for (std::size_t b = 0; b < centers.size(); ++b) {
      double mass = map.nu.ball_mass(centers[b], ball_factor * eps);
      level.weight.push_back(mass > 0.0 ? std::pow(mass, 1.0 / alpha) : 0.0);
      RngStream stream(root.split(std::uint64_t(n) << 32 | std::uint64_t(b)));
      level.xi.push_back(stream.unit_ball(N));
    }
    map.levels.push_back(std::move(level));
  }
  return map;
}

std::vector<double> evaluate(const RandomSobolevMap& map, const Point& x) {
  Point xs = scale_point(x, map.rescale);
  std::vector<double> out(map.N, 0.0);
  for (std::size_t li = 0; li < map.levels.size(); ++li) {
    const auto& level = map.levels[li];
    const auto& centers = map.nets[li].centers;
    double damp = damping(level.n);
    for (std::size_t b = 0; b < centers.size(); ++b) {
      if (level.weight[b] == 0.0) continue;
      double d = distance(xs, centers[b]);
      if (d >= 2.0 * level.radius) continue;
      double coeff = damp * level.weight[b] * bump(d, level.radius);
      for (int i = 0; i < map.N; ++i) out[i] += coeff * level.xi[b][i];
    }
  }
  return out;
}

double lip_level(const RandomSobolevMap& map, int n, const Point& x) {
  Point xs = scale_point(x, map.rescale);
  const auto& level = map.levels.at(std::size_t(n) - 1);
  const auto& centers = map.nets.at(std::size_t(n) - 1).centers;
  double sum = 0.0;
  for (std::size_t b = 0; b < centers.size(); ++b) {
    if (level.weight[b] == 0.0) continue;
    if (distance(xs, centers[b]) < 2.0 * level.radius)
      sum += level.weight[b] / level.radius;
  }
  return sum;
}

double lip_upper(const RandomSobolevMap& map, const Point& x) {
  double sum = 0.0;
  for (const auto& level : map.levels)
    sum += damping(level.n) * lip_level(map, level.n, x);
  return sum;
}

LevelNorms level_lp_norms(const RandomSobolevMap& map, double p,
                          const DiscreteMeasure& ambient) {
  if (ambient.size() == 0) throw EmptyInput("level_lp_norms ambient sample");
  LevelNorms out;
  out.per_level.assign(map.levels.size(), 0.0);

  // per-point level fields, compensated accumulation per level
  std::vector<double> acc(map.levels.size(), 0.0), comp(map.levels.size(), 0.0);
  double acc_total = 0.0, comp_total = 0.0;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    double w = ambient.weights[i];
    if (w == 0.0) continue;
    double total_field = 0.0;
    for (std::size_t li = 0; li < map.levels.size(); ++li) {
      double field = lip_level(map, map.levels[li].n, ambient.atoms[i]);
      total_field += damping(map.levels[li].n) * field;
      double term = w * std::pow(field, p);
      double y = term - comp[li];
      double t = acc[li] + y;
      comp[li] = (t - acc[li]) - y;
      acc[li] = t;
    }
    double term = w * std::pow(total_field, p);
    double y = term - comp_total;
    double t = acc_total + y;
    comp_total = (t - acc_total) - y;
    acc_total = t;
  }
  for (std::size_t li = 0; li < map.levels.size(); ++li)
    out.per_level[li] = std::pow(acc[li], 1.0 / p);
  out.total = std::pow(acc_total, 1.0 / p);
  return out;
}

double truncation_tail_bound(const RandomSobolevMap& map) {
  double max_w = 0.0;
  if (!map.levels.empty())
    for (double w : map.levels.back().weight) max_w = std::max(max_w, w);
  // sum_{n > n_max} (1+n)^{-2} < 1/(1+n_max)
  return max_w / double(1 + map.n_max);
}

MorreyReport morrey_diagnostic(const RandomSobolevMap& map, const std::vector<Ball>& balls,
                               double p, const DiscreteMeasure& ambient) {
  MorreyReport rep;
  rep.vacuous = true;
  for (const auto& ball : balls) {
    std::vector<std::size_t> members;
    double mass = 0.0;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
      if (distance(ambient.atoms[i], ball.center) < ball.radius) {
        members.push_back(i);
        mass += ambient.weights[i];
      }
    }
    if (members.empty()) throw InvalidParameter("morrey_diagnostic: ball with empty sample");

    double avg_gp = 0.0;
    for (auto i : members)
      avg_gp += ambient.weights[i] * std::pow(lip_upper(map, ambient.atoms[i]), p);
    avg_gp = mass > 0.0 ? avg_gp / mass : 0.0;

    double diam_f = 0.0;
    std::vector<std::vector<double>> images;
    images.reserve(members.size());
    for (auto i : members) images.push_back(evaluate(map, ambient.atoms[i]));
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        double d2 = 0.0;
        for (int i = 0; i < map.N; ++i) {
          double d = images[a][i] - images[b][i];
          d2 += d * d;
        }
        diam_f = std::max(diam_f, std::sqrt(d2));
      }
    }

    if (avg_gp > 0.0) {
      rep.vacuous = false;
      double denom = 2.0 * ball.radius * std::pow(avg_gp, 1.0 / p);
      rep.sup_ratio = std::max(rep.sup_ratio, diam_f / denom);
    }
    ++rep.balls_used;
  }
  return rep;
}

std::string RandomSobolevMap::to_json() const {
  nlohmann::json j;
  j["alpha"] = alpha;
  j["N"] = N;
  j["n_max"] = n_max;
  j["seed"] = seed;
  j["ball_factor"] = ball_factor;
  j["rescale"] = rescale;
  j["space"] = nu.atoms.empty() ? "euclidean" : space_name(nu.atoms.front().space);

  auto dump_points = [](const std::vector<Point>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back(p.x);
    return arr;
  };

  j["nu"]["atoms"] = dump_points(nu.atoms);
  j["nu"]["weights"] = nu.weights;

  j["levels"] = nlohmann::json::array();
  for (std::size_t li = 0; li < levels.size(); ++li) {
    nlohmann::json lj;
    lj["n"] = levels[li].n;
    lj["radius"] = levels[li].radius;
    lj["centers"] = dump_points(nets[li].centers);
    lj["parent_prefix"] = nets[li].parent_prefix;
    lj["covering_radius"] = nets[li].covering_radius;
    lj["weights"] = levels[li].weight;
    lj["xi"] = levels[li].xi;
    j["levels"].push_back(std::move(lj));
  }
  return j.dump();
}

RandomSobolevMap RandomSobolevMap::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  RandomSobolevMap map;
  map.alpha = j["alpha"].get<double>();
  map.N = j["N"].get<int>();
  map.n_max = j["n_max"].get<int>();
  map.seed = j["seed"].get<std::uint64_t>();
  map.ball_factor = j["ball_factor"].get<double>();
  map.rescale = j["rescale"].get<double>();
  Space space = space_from_name(j["space"].get<std::string>());

  auto load_points = [space](const nlohmann::json& arr) {
    std::vector<Point> pts;
    for (const auto& e : arr) {
      Point p;
      p.space = space;
      p.x = e.get<std::vector<double>>();
      pts.push_back(std::move(p));
    }
    return pts;
  };

  map.nu = DiscreteMeasure::make(load_points(j["nu"]["atoms"]),
                                 j["nu"]["weights"].get<std::vector<double>>());
  for (const auto& lj : j["levels"]) {
    Net net;
    net.centers = load_points(lj["centers"]);
    net.epsilon = lj["radius"].get<double>();
    net.parent_prefix = lj["parent_prefix"].get<std::size_t>();
    net.covering_radius = lj["covering_radius"].get<double>();
    map.nets.push_back(std::move(net));

    SobolevMapLevel level;
    level.n = lj["n"].get<int>();
    level.radius = lj["radius"].get<double>();
    level.weight = lj["weights"].get<std::vector<double>>();
    level.xi = lj["xi"].get<std::vector<std::vector<double>>>();
    map.levels.push_back(std::move(level));
  }
  return map;
}

}  // namespace dimdist
