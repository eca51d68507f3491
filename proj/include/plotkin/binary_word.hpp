#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plotkin {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
// Addition is XOR; the norm is the Hamming weight.
class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(int len) : len_(len), w_(word_count(len), 0) {
    if (len < 0) throw std::invalid_argument("BinaryWord: negative length");
  }

  static BinaryWord from_string(std::string_view bits) {
    BinaryWord w(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        w.set(static_cast<int>(i), true);
      else if (bits[i] != '0')
        throw std::invalid_argument("BinaryWord: bad bit character");
    }
    return w;
  }

  int len() const { return len_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(int i, bool v) {
    uint64_t mask = uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  int weight() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool is_zero() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }

  BinaryWord& operator^=(const BinaryWord& o) {
    if (o.len_ != len_) throw std::invalid_argument("BinaryWord: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend BinaryWord operator^(BinaryWord a, const BinaryWord& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
    return a.len_ == b.len_ && a.w_ == b.w_;
  }

  friend bool operator<(const BinaryWord& a, const BinaryWord& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.w_ < b.w_;
  }

  BinaryWord slice(int begin, int end) const {
    if (begin < 0 || end > len_ || begin > end)
      throw std::invalid_argument("BinaryWord: bad slice");
    BinaryWord out(end - begin);
    for (int i = begin; i < end; ++i)
      if (get(i)) out.set(i - begin, true);
    return out;
  }

  static BinaryWord concat(std::span<const BinaryWord> parts) {
    int total = 0;
    for (const auto& p : parts) total += p.len();
    BinaryWord out(total);
    int off = 0;
    for (const auto& p : parts) {
      for (int i = 0; i < p.len(); ++i)
        if (p.get(i)) out.set(off + i, true);
      off += p.len();
    }
    return out;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  static size_t word_count(int len) { return (static_cast<size_t>(len) + 63) / 64; }

  int len_ = 0;
  std::vector<uint64_t> w_;
};

inline int hamming_distance(const BinaryWord& a, const BinaryWord& b) {
  return (a ^ b).weight();
}

}  // namespace plotkin
