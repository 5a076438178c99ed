#include "dimdist/carpet.hpp"

#include <cmath>

#include <json.hpp>

#include "dimdist/error.hpp"
#include "dimdist/rng.hpp"

namespace dimdist {

int CarpetSpec::a(int level) const {
  if (level < 1) throw InvalidParameter("carpet level must be >= 1");
  if (sequence.empty()) return 2 * level + 1;
  if (level <= int(sequence.size())) return sequence[level - 1];
  return sequence.back();
}

double CarpetSpec::cell_side(int depth) const {
  double side = 1.0;
  for (int k = 1; k <= depth; ++k) side /= a(k);
  return side;
}

double CarpetSpec::level_mass(int depth) const {
  double m = 1.0;
  for (int k = 1; k <= depth; ++k) m /= double(a(k)) * a(k) - 1.0;
  return m;
}

std::vector<double> CarpetSpec::convergence_partial_sums(int upto) const {
  std::vector<double> sums;
  double s = 0.0;
  for (int k = 1; k <= upto; ++k) {
    double ak = a(k);
    s += 1.0 / (ak * ak);
    sums.push_back(s);
  }
  return sums;
}

void CarpetSpec::validate() const {
  if (max_depth < 1) throw InvalidParameter("carpet max_depth must be >= 1");
  for (int k = 1; k <= max_depth; ++k) {
    int ak = a(k);
    if (ak < 3 || ak % 2 == 0)
      throw InvalidParameter("carpet sequence entries must be odd and >= 3");
  }
}

std::string CarpetSpec::to_json() const {
  nlohmann::json j;
  if (sequence.empty()) {
    j["sequence"] = "2n+1";
  } else {
    j["sequence"] = sequence;
  }
  j["max_depth"] = max_depth;
  return j.dump();
}

CarpetSpec CarpetSpec::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  CarpetSpec spec;
  if (j.contains("sequence")) {
    if (j["sequence"].is_string()) {
      if (j["sequence"].get<std::string>() != "2n+1")
        throw ConfigError("unknown carpet sequence generator: " +
                          j["sequence"].get<std::string>());
    } else {
      spec.sequence = j["sequence"].get<std::vector<int>>();
    }
  }
  if (j.contains("max_depth")) spec.max_depth = j["max_depth"].get<int>();
  spec.validate();
  return spec;
}

bool carpet_contains(const CarpetSpec& spec, double px, double py, int depth) {
  if (px < 0.0 || px > 1.0 || py < 0.0 || py > 1.0)
    throw InvalidParameter("carpet point outside the unit square");
  if (depth > spec.max_depth) throw InvalidParameter("depth exceeds carpet max_depth");
  double x = px;
  double y = py;
  for (int k = 1; k <= depth; ++k) {
    int ak = spec.a(k);
    // half-open cells, top/right boundary folded into the last cell
    int ix = std::min(int(x * ak), ak - 1);
    int iy = std::min(int(y * ak), ak - 1);
    int c = (ak - 1) / 2;
    if (ix == c && iy == c) return false;
    x = x * ak - ix;
    y = y * ak - iy;
  }
  return true;
}

bool carpet_contains(const CarpetSpec& spec, const Point& p, int depth) {
  if (p.space != Space::Carpet && p.space != Space::Euclidean)
    throw SpaceMismatch("carpet_contains expects a planar point");
  if (p.x.size() != 2) throw InvalidParameter("carpet point needs 2 coordinates");
  return carpet_contains(spec, p.x[0], p.x[1], depth);
}

namespace {

Point cell_point(const CarpetSpec& spec, const std::vector<int>& address) {
  Point p;
  p.space = Space::Carpet;
  double x = 0.0, y = 0.0, side = 1.0;
  for (std::size_t k = 0; k < address.size(); ++k) {
    int ak = spec.a(int(k) + 1);
    int ix = address[k] % ak;
    int iy = address[k] / ak;
    side /= ak;
    x += ix * side;
    y += iy * side;
  }
  p.x = {x + side / 2.0, y + side / 2.0};
  p.address = address;
  return p;
}

void enumerate_rec(const CarpetSpec& spec, int depth, std::vector<int>& address,
                   std::vector<Point>& out) {
  if (int(address.size()) == depth) {
    out.push_back(cell_point(spec, address));
    return;
  }
  int ak = spec.a(int(address.size()) + 1);
  int c = (ak - 1) / 2;
  int central = c * ak + c;
  for (int idx = 0; idx < ak * ak; ++idx) {
    if (idx == central) continue;
    address.push_back(idx);
    enumerate_rec(spec, depth, address, out);
    address.pop_back();
  }
}

}  // namespace

CarpetSample carpet_enumerate(const CarpetSpec& spec, int depth) {
  spec.validate();
  if (depth < 1 || depth > spec.max_depth)
    throw InvalidParameter("carpet depth out of range");
  CarpetSample sample;
  std::vector<int> address;
  enumerate_rec(spec, depth, address, sample.points);
  double mass = spec.level_mass(depth);
  std::vector<double> weights(sample.points.size(), mass);
  sample.measure = DiscreteMeasure::make(sample.points, std::move(weights));
  return sample;
}

CarpetSample carpet_sample(const CarpetSpec& spec, int depth, std::size_t count,
                           std::uint64_t rng_seed) {
  spec.validate();
  if (depth < 1 || depth > spec.max_depth)
    throw InvalidParameter("carpet depth out of range");
  if (count < 1) throw InvalidParameter("carpet sample count must be >= 1");

  double total_cells = 1.0;
  for (int k = 1; k <= depth; ++k)
    total_cells *= double(spec.a(k)) * spec.a(k) - 1.0;
  if (double(count) >= total_cells) return carpet_enumerate(spec, depth);

  CounterRng rng(rng_seed);
  CarpetSample sample;
  sample.points.reserve(count);
  std::vector<int> address(depth);
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng draw = rng.split(i);
    for (int k = 1; k <= depth; ++k) {
      int ak = spec.a(k);
      int c = (ak - 1) / 2;
      int central = c * ak + c;
      int j = int(draw.bits(std::uint64_t(k)) % std::uint64_t(ak * ak - 1));
      address[k - 1] = (j >= central) ? j + 1 : j;
    }
    sample.points.push_back(cell_point(spec, address));
  }
  std::vector<double> weights(sample.points.size(), 1.0 / double(count));
  sample.measure = DiscreteMeasure::make(sample.points, std::move(weights));
  return sample;
}

}  // namespace dimdist
