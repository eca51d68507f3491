#pragma once

#include <cstdint>
#include <random>

namespace plotkin {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-seedable stream: trial i of point p under a master seed always gets
// the same generator state, independent of worker scheduling.
class TrialRng {
 public:
  explicit TrialRng(uint64_t master, uint64_t stream = 0, uint64_t substream = 0) {
    uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (0xA0761D6478BD642Full * (stream + 1)));
    s = splitmix64(s ^ (0xE7037ED1A0B428DBull * (substream + 1)));
    eng_.seed(s);
  }

  uint64_t bits() { return eng_(); }

  double uniform01() { return std::generate_canonical<double, 53>(eng_); }

  double gaussian(double sigma) { return sigma * norm_(eng_); }

  bool bernoulli(double p) { return uniform01() < p; }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> norm_{0.0, 1.0};
};

}  // namespace plotkin
