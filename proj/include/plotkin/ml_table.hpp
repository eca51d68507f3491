#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "plotkin/leaf_decoders.hpp"

namespace plotkin {

// Exhaustive correlation maximization over all 2^k codewords, organized for
// speed: per chunk of up to 16 coordinates a table of masked partial sums is
// built once per received vector, so each codeword costs a handful of
// additions. Decisions match plain enumeration exactly; ties keep the lowest
// information index.
class MlTableDecoder final : public ComponentDecoder {
 public:
  explicit MlTableDecoder(LinearCode code) : ComponentDecoder(std::move(code)) {
    if (code_.k() > kEnumerationBound)
      throw std::invalid_argument("MlTableDecoder: enumeration bound exceeded");
    int n = code_.n();
    for (int off = 0; off < n; off += 16) chunk_bits_.push_back(std::min(16, n - off));
    size_t chunks = chunk_bits_.size();
    chunk_idx_.assign(code_.num_codewords() * chunks, 0);
    BinaryWord c(n);
    store_chunks(0, c);
    uint64_t total = code_.num_codewords();
    // Gray-order enumeration; info index recovered from the gray code.
    uint64_t gray_info = 0;
    for (uint64_t g = 1; g < total; ++g) {
      int bit = std::countr_zero(g);
      c ^= code_.generator_rows()[bit];
      gray_info ^= uint64_t(1) << bit;
      store_chunks(gray_info, c);
    }
  }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    if (y.len() != code_.n()) throw std::invalid_argument("MlTableDecoder: length mismatch");
    size_t chunks = chunk_bits_.size();
    std::vector<std::vector<double>> table(chunks);
    double total_sum = 0.0;
    int off = 0;
    for (size_t cidx = 0; cidx < chunks; ++cidx) {
      int bits = chunk_bits_[cidx];
      auto& t = table[cidx];
      t.assign(size_t(1) << bits, 0.0);
      for (uint32_t m = 1; m < t.size(); ++m) {
        uint32_t low = m & (m - 1);
        t[m] = t[low] + y.v[off + std::countr_zero(m)];
      }
      ctr.additions += t.size() - 1;
      off += bits;
    }
    for (double v : y.v) total_sum += v;
    ctr.additions += y.len() - 1;

    uint64_t best_u = 0;
    double best_phi = 0.0;
    uint64_t total = code_.num_codewords();
    for (uint64_t u = 0; u < total; ++u) {
      double masked = 0.0;
      const uint16_t* idx = &chunk_idx_[u * chunks];
      for (size_t cidx = 0; cidx < chunks; ++cidx) masked += table[cidx][idx[cidx]];
      double phi = total_sum - 2.0 * masked;
      if (u == 0 || phi > best_phi) {
        best_u = u;
        best_phi = phi;
      }
    }
    ctr.additions += total * chunks;
    ctr.comparisons += total - 1;
    ctr.signs += total;

    DecodeOutcome out;
    out.word = modulate(code_.codeword_at(best_u));
    out.correlation = best_phi;
    return out;
  }

 private:
  void store_chunks(uint64_t info, const BinaryWord& c) {
    size_t chunks = chunk_bits_.size();
    int off = 0;
    for (size_t cidx = 0; cidx < chunks; ++cidx) {
      uint16_t m = 0;
      for (int i = 0; i < chunk_bits_[cidx]; ++i)
        if (c.get(off + i)) m |= uint16_t(1) << i;
      chunk_idx_[info * chunks + cidx] = m;
      off += chunk_bits_[cidx];
    }
  }

  std::vector<int> chunk_bits_;
  std::vector<uint16_t> chunk_idx_;
};

}  // namespace plotkin
