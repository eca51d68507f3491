#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plotkin/binary_word.hpp"
#include "plotkin/rng.hpp"

namespace plotkin {

// BPSK symbols: bit 0 <-> +1, bit 1 <-> -1.
struct ModulatedWord {
  std::vector<int8_t> s;

  ModulatedWord() = default;
  explicit ModulatedWord(int len, int8_t fill = 1) : s(len, fill) {}

  int len() const { return static_cast<int>(s.size()); }
  int8_t operator[](int i) const { return s[i]; }
  int8_t& operator[](int i) { return s[i]; }

  // Elementwise product; mirrors GF(2) addition of the underlying words.
  friend ModulatedWord operator*(const ModulatedWord& a, const ModulatedWord& b) {
    if (a.len() != b.len()) throw std::invalid_argument("ModulatedWord: length mismatch");
    ModulatedWord r(a.len());
    for (int i = 0; i < a.len(); ++i) r.s[i] = static_cast<int8_t>(a.s[i] * b.s[i]);
    return r;
  }

  ModulatedWord operator-() const {
    ModulatedWord r(len());
    for (int i = 0; i < len(); ++i) r.s[i] = static_cast<int8_t>(-s[i]);
    return r;
  }

  friend bool operator==(const ModulatedWord& a, const ModulatedWord& b) { return a.s == b.s; }
};

// Real-valued received vector, one value per code bit.
struct SoftWord {
  std::vector<double> v;

  SoftWord() = default;
  explicit SoftWord(int len, double fill = 0.0) : v(len, fill) {}

  int len() const { return static_cast<int>(v.size()); }
  double operator[](int i) const { return v[i]; }
  double& operator[](int i) { return v[i]; }
};

inline ModulatedWord modulate(const BinaryWord& u) {
  ModulatedWord x(u.len());
  for (int i = 0; i < u.len(); ++i) x.s[i] = u.get(i) ? -1 : 1;
  return x;
}

inline BinaryWord demodulate(const ModulatedWord& x) {
  BinaryWord u(x.len());
  for (int i = 0; i < x.len(); ++i)
    if (x.s[i] < 0) u.set(i, true);
  return u;
}

// Hard decision: value >= 0 maps to bit 0.
inline BinaryWord hard_decision(const SoftWord& y) {
  BinaryWord r(y.len());
  for (int i = 0; i < y.len(); ++i)
    if (y.v[i] < 0) r.set(i, true);
  return r;
}

// Es/N0 [dB] = Eb/N0 [dB] - 10*log10(1/R); noise variance 1/(2*10^(Es/N0/10)).
inline double sigma_from_config(double eb_n0_db, double rate) {
  if (rate <= 0.0) throw std::invalid_argument("sigma_from_config: nonpositive rate");
  double es_n0_db = eb_n0_db - 10.0 * std::log10(1.0 / rate);
  double es_n0 = std::pow(10.0, es_n0_db / 10.0);
  return std::sqrt(1.0 / (2.0 * es_n0));
}

struct ChannelConfig {
  double eb_n0_db = 0.0;
  double rate = 1.0;
  double sigma = 1.0;
  uint64_t seed = 1;

  static ChannelConfig make(double eb_n0_db, double rate, uint64_t seed = 1) {
    ChannelConfig c;
    c.eb_n0_db = eb_n0_db;
    c.rate = rate;
    c.sigma = sigma_from_config(eb_n0_db, rate);
    c.seed = seed;
    return c;
  }
};

inline SoftWord awgn(const ModulatedWord& x, double sigma, TrialRng& rng) {
  SoftWord y(x.len());
  for (int i = 0; i < x.len(); ++i) y.v[i] = x.s[i] + rng.gaussian(sigma);
  return y;
}

inline SoftWord awgn(const ModulatedWord& x, const ChannelConfig& cfg, TrialRng& rng) {
  return awgn(x, cfg.sigma, rng);
}

inline BinaryWord bsc(const BinaryWord& c, double p, TrialRng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bsc: flip probability out of range");
  BinaryWord r = c;
  for (int i = 0; i < c.len(); ++i)
    if (rng.bernoulli(p)) r.flip(i);
  return r;
}

inline double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace plotkin
