#include "dimdist/net.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "dimdist/error.hpp"

namespace dimdist {

namespace {

// Conservative candidate index for fixed-radius neighbor queries. Exact
// distances are always re-checked by the caller, so the index only has to
// return a superset of the points within `scale` of a query.
class NeighborIndex {
 public:
  NeighborIndex(const std::vector<Point>& store, const Point& probe, double scale)
      : store_(store), scale_(scale) {
    if (probe.space == Space::Heisenberg && probe.x.size() == 3) {
      mode_ = Mode::Heis1;
    } else if (probe.space == Space::Euclidean || probe.space == Space::Carpet) {
      mode_ = Mode::Grid;
      gdim_ = int(std::min<std::size_t>(probe.x.size(), 3));
    } else {
      mode_ = Mode::Brute;
    }
  }

  void insert(std::size_t id) {
    switch (mode_) {
      case Mode::Brute:
        all_.push_back(id);
        break;
      case Mode::Grid:
        grid_[grid_key(store_[id])].push_back(id);
        break;
      case Mode::Heis1: {
        const Point& p = store_[id];
        std::int64_t ci = cell(p.x[0]);
        std::int64_t cj = cell(p.x[1]);
        auto& col = heis_[pack(ci, cj)];
        double tc = cell_frame_t(p, ci, cj);
        auto it = std::lower_bound(col.begin(), col.end(), tc,
                                   [](const auto& e, double v) { return e.first < v; });
        col.insert(it, {tc, id});
        break;
      }
    }
  }

  template <typename F>
  void candidates(const Point& q, F&& fn) const {
    switch (mode_) {
      case Mode::Brute:
        for (auto id : all_) fn(id);
        break;
      case Mode::Grid: {
        std::array<std::int64_t, 3> base{};
        for (int d = 0; d < gdim_; ++d) base[d] = cell(q.x[d]);
        std::array<std::int64_t, 3> off{};
        visit_grid(q, base, off, 0, fn);
        break;
      }
      case Mode::Heis1: {
        std::int64_t qi = cell(q.x[0]);
        std::int64_t qj = cell(q.x[1]);
        // A point within Koranyi distance `scale` of q differs by less than
        // `scale` in x and y, so it lies in the 3x3 cell neighborhood. The
        // cell-frame t coordinates then agree up to the twist bound
        // 8*scale^2 plus the ball extent scale^2; 10 is a safe margin.
        const double window = 10.0 * scale_ * scale_;
        for (std::int64_t di = -1; di <= 1; ++di) {
          for (std::int64_t dj = -1; dj <= 1; ++dj) {
            auto it = heis_.find(pack(qi + di, qj + dj));
            if (it == heis_.end()) continue;
            double tq = cell_frame_t(q, qi + di, qj + dj);
            const auto& col = it->second;
            auto lo = std::lower_bound(col.begin(), col.end(), tq - window,
                                       [](const auto& e, double v) { return e.first < v; });
            for (; lo != col.end() && lo->first <= tq + window; ++lo) fn(lo->second);
          }
        }
        break;
      }
    }
  }

 private:
  enum class Mode { Brute, Grid, Heis1 };

  std::int64_t cell(double v) const { return std::int64_t(std::floor(v / scale_)); }

  static std::uint64_t pack(std::int64_t a, std::int64_t b) {
    return (std::uint64_t(a) & 0xffffffffull) << 32 | (std::uint64_t(b) & 0xffffffffull);
  }

  std::uint64_t grid_key(const Point& p) const {
    std::uint64_t h = 0x9e37'79b9'7f4a'7c15ull;
    for (int d = 0; d < gdim_; ++d) {
      h ^= std::uint64_t(cell(p.x[d])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  template <typename F>
  void visit_grid(const Point& q, const std::array<std::int64_t, 3>& base,
                  std::array<std::int64_t, 3>& off, int d, F&& fn) const {
    if (d == gdim_) {
      std::uint64_t h = 0x9e37'79b9'7f4a'7c15ull;
      for (int k = 0; k < gdim_; ++k) {
        h ^= std::uint64_t(base[k] + off[k]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      auto it = grid_.find(h);
      if (it != grid_.end())
        for (auto id : it->second) fn(id);
      return;
    }
    for (off[d] = -1; off[d] <= 1; ++off[d]) visit_grid(q, base, off, d + 1, fn);
  }

  // t coordinate of p in the frame of cell (ci,cj): the t component of
  // c^{-1}*p with c the cell corner, which flattens the group twist locally.
  double cell_frame_t(const Point& p, std::int64_t ci, std::int64_t cj) const {
    double cx = double(ci) * scale_;
    double cy = double(cj) * scale_;
    return p.x[2] + 2.0 * (cx * p.x[1] - cy * p.x[0]);
  }

  const std::vector<Point>& store_;
  double scale_;
  Mode mode_ = Mode::Brute;
  int gdim_ = 0;
  std::vector<std::size_t> all_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<double, std::size_t>>> heis_;
};

}  // namespace

Net maximal_separated_net(const std::vector<Point>& points, double eps, const Net* seed) {
  if (points.empty()) throw EmptyInput("maximal_separated_net");
  if (!(eps > 0.0)) throw InvalidParameter("net separation eps must be positive");
  check_same_space(points);

  Net net;
  net.epsilon = eps;
  if (seed) {
    net.centers = seed->centers;
    net.parent_prefix = seed->centers.size();
  }

  // The index stores ids into net.centers; insertion reads the point at
  // insert time so vector reallocation is harmless.
  NeighborIndex index(net.centers, points.front(), eps);
  for (std::size_t i = 0; i < net.centers.size(); ++i) index.insert(i);

  for (const auto& p : points) {
    bool separated = true;
    index.candidates(p, [&](std::size_t id) {
      if (separated && distance(p, net.centers[id]) < eps) separated = false;
    });
    if (separated) {
      net.centers.push_back(p);
      index.insert(net.centers.size() - 1);
    }
  }

  double cover = 0.0;
  for (const auto& p : points) {
    double best = std::numeric_limits<double>::infinity();
    index.candidates(p, [&](std::size_t id) {
      best = std::min(best, distance(p, net.centers[id]));
    });
    cover = std::max(cover, best);
  }
  net.covering_radius = cover;
  return net;
}

CoverResult greedy_cover_count(const std::vector<Point>& points, double r) {
  if (points.empty()) throw EmptyInput("greedy_cover_count");
  if (!(r > 0.0)) throw InvalidParameter("cover radius must be positive");
  Net net = maximal_separated_net(points, r);
  CoverResult res;
  res.count = net.centers.size();
  res.balls.reserve(net.centers.size());
  for (const auto& c : net.centers) res.balls.push_back(Ball{c, r});
  return res;
}

std::vector<Point> ball_members(const std::vector<Point>& points, const Point& center,
                                double r) {
  std::vector<Point> out;
  for (const auto& p : points)
    if (distance(p, center) < r) out.push_back(p);
  return out;
}

}  // namespace dimdist
