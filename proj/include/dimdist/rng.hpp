#ifndef DIMDIST_RNG_HPP
#define DIMDIST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace dimdist {

// splitmix64 finalizer; the basis for every random stream in the library.
// All sampling is built from explicit uniforms so results are identical
// across platforms and standard libraries.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based generator: value(i) depends only on (key, i), so shards
// drawn at arbitrary counter offsets are deterministic and order-independent.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(splitmix64(key ^ 0x5bf0'3635'dcb2'9d6full)) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64(key_ ^ splitmix64(counter));
  }

  // uniform in [0,1)
  double uniform(std::uint64_t counter) const {
    return double(bits(counter) >> 11) * 0x1.0p-53;
  }

  CounterRng split(std::uint64_t stream) const {
    return CounterRng(key_ ^ splitmix64(stream * 0x9e3779b97f4a7c15ull + 0x1234'5678'9abc'deffull));
  }

 private:
  std::uint64_t key_;
};

// Sequential convenience stream over a CounterRng.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : rng_(seed) {}
  RngStream(const CounterRng& rng) : rng_(rng) {}

  double uniform() { return rng_.uniform(ctr_++); }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::uint64_t integer(std::uint64_t n) {  // in [0, n)
    return rng_.bits(ctr_++) % n;
  }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // uniform on the closed unit ball of R^N: normalized Gaussian direction
  // scaled by U^{1/N}
  std::vector<double> unit_ball(int N) {
    std::vector<double> v(N);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < N; ++i) {
        v[i] = normal();
        norm2 += v[i] * v[i];
      }
    } while (norm2 == 0.0);
    double scale = std::pow(uniform(), 1.0 / N) / std::sqrt(norm2);
    for (auto& c : v) c *= scale;
    return v;
  }

 private:
  CounterRng rng_;
  std::uint64_t ctr_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dimdist

#endif
