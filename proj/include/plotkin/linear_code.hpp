#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plotkin/binary_word.hpp"

namespace plotkin {

// Distance value used for the zero-dimensional code, which has no nonzero word.
inline constexpr int kNoNonzeroWord = std::numeric_limits<int>::max();

// Largest dimension for which exhaustive codeword enumeration is allowed.
inline constexpr int kEnumerationBound = 20;

// Binary linear code given by a generator matrix kept in reduced row echelon
// form, so two codes are equal iff their generator matrices are equal.
class LinearCode {
 public:
  LinearCode() = default;

  // Builds the code spanned by `rows`; duplicate/dependent rows are dropped.
  static LinearCode from_rows(int n, std::vector<BinaryWord> rows, int d_declared,
                              std::string label = {}) {
    LinearCode c;
    c.n_ = n;
    for (const auto& r : rows)
      if (r.len() != n) throw std::invalid_argument("LinearCode: row length mismatch");
    c.rows_ = std::move(rows);
    c.reduce();
    c.d_declared_ = c.k() == 0 ? kNoNonzeroWord : d_declared;
    c.label_ = std::move(label);
    return c;
  }

  int n() const { return n_; }
  int k() const { return static_cast<int>(rows_.size()); }
  int d_declared() const { return d_declared_; }
  bool distance_verified() const { return d_verified_; }
  const std::string& label() const { return label_; }
  const std::vector<BinaryWord>& generator_rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  LinearCode with_label(std::string label) const {
    LinearCode c = *this;
    c.label_ = std::move(label);
    return c;
  }

  uint64_t num_codewords() const { return uint64_t(1) << k(); }

  BinaryWord encode(const BinaryWord& info) const {
    if (info.len() != k()) throw std::invalid_argument("encode: info length != k");
    BinaryWord c(n_);
    for (int i = 0; i < k(); ++i)
      if (info.get(i)) c ^= rows_[i];
    return c;
  }

  BinaryWord codeword_at(uint64_t info_index) const {
    BinaryWord c(n_);
    for (int i = 0; i < k(); ++i)
      if ((info_index >> i) & 1) c ^= rows_[i];
    return c;
  }

  // With the generator in RREF the pivot coordinates of a codeword carry the
  // information bits unchanged.
  BinaryWord info_from_codeword(const BinaryWord& c) const {
    BinaryWord info(k());
    for (int i = 0; i < k(); ++i)
      if (c.get(pivots_[i])) info.set(i, true);
    return info;
  }

  // Indicator function: membership in the row space.
  bool contains(const BinaryWord& w) const {
    if (w.len() != n_) throw std::invalid_argument("contains: length mismatch");
    BinaryWord r = w;
    for (int i = 0; i < k(); ++i)
      if (r.get(pivots_[i])) r ^= rows_[i];
    return r.is_zero();
  }

  // Information vector u with encode(u) == w, when w is a codeword.
  std::optional<BinaryWord> solve_info(const BinaryWord& w) const {
    if (w.len() != n_) throw std::invalid_argument("solve_info: length mismatch");
    BinaryWord r = w;
    BinaryWord u(k());
    for (int i = 0; i < k(); ++i) {
      if (r.get(pivots_[i])) {
        r ^= rows_[i];
        u.set(i, true);
      }
    }
    if (!r.is_zero()) return std::nullopt;
    return u;
  }

  bool is_subcode_of(const LinearCode& other) const {
    if (other.n_ != n_) throw std::invalid_argument("is_subcode_of: length mismatch");
    for (const auto& r : rows_)
      if (!other.contains(r)) return false;
    return true;
  }

  // Visits all 2^k codewords in Gray-code order (info index order is not
  // sequential, but every codeword appears exactly once).
  void for_each_codeword(const std::function<void(const BinaryWord&)>& fn) const {
    BinaryWord c(n_);
    fn(c);
    uint64_t total = num_codewords();
    for (uint64_t g = 1; g < total; ++g)
      fn(c ^= rows_[std::countr_zero(g)]);
  }

  // Exact minimum nonzero weight by full enumeration; updates d_declared.
  int verify_min_distance() {
    if (k() == 0) {
      d_verified_ = true;
      return d_declared_;
    }
    if (k() > kEnumerationBound)
      throw std::invalid_argument("verify_min_distance: dimension exceeds enumeration bound");
    int best = kNoNonzeroWord;
    BinaryWord c(n_);
    uint64_t total = num_codewords();
    for (uint64_t g = 1; g < total; ++g) {
      c ^= rows_[std::countr_zero(g)];
      best = std::min(best, c.weight());
    }
    d_declared_ = best;
    d_verified_ = true;
    return best;
  }

  // Smallest weight among `samples` random nonzero codewords; an upper bound
  // on d, recorded as sampled evidence, never as proof.
  int sampled_weight_floor(uint64_t samples, uint64_t seed = 1) const {
    if (k() == 0) return d_declared_;
    std::mt19937_64 rng(seed);
    int best = kNoNonzeroWord;
    for (uint64_t s = 0; s < samples; ++s) {
      uint64_t u = rng() & (num_codewords() - 1);
      if (u == 0) continue;
      best = std::min(best, codeword_at(u).weight());
    }
    return best;
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void reduce() {
    int r = 0;
    pivots_.clear();
    for (int col = 0; col < n_ && r < static_cast<int>(rows_.size()); ++col) {
      int pivot = -1;
      for (int i = r; i < static_cast<int>(rows_.size()); ++i) {
        if (rows_[i].get(col)) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(rows_[r], rows_[pivot]);
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
        if (i != r && rows_[i].get(col)) rows_[i] ^= rows_[r];
      pivots_.push_back(col);
      ++r;
    }
    rows_.resize(r);  // drop dependent rows
  }

  int n_ = 0;
  int d_declared_ = kNoNonzeroWord;
  bool d_verified_ = false;
  std::vector<BinaryWord> rows_;
  std::vector<int> pivots_;
  std::string label_;
};

inline int saturating_double(int d) {
  return d == kNoNonzeroWord ? kNoNonzeroWord : 2 * d;
}

// |u0|u0+u1| construction: length 2n, dimension k0+k1, distance min{2*d0, d1}.
inline LinearCode plotkin_construction(const LinearCode& c0, const LinearCode& c1) {
  if (c0.n() != c1.n()) throw std::invalid_argument("plotkin: length mismatch");
  int n = c0.n();
  std::vector<BinaryWord> rows;
  rows.reserve(c0.k() + c1.k());
  for (const auto& r : c0.generator_rows()) {
    BinaryWord parts[2] = {r, r};
    rows.push_back(BinaryWord::concat(parts));
  }
  for (const auto& r : c1.generator_rows()) {
    BinaryWord parts[2] = {BinaryWord(n), r};
    rows.push_back(BinaryWord::concat(parts));
  }
  int d = std::min(saturating_double(c0.d_declared()), c1.d_declared());
  return LinearCode::from_rows(2 * n, std::move(rows), d);
}

inline LinearCode repetition_code(int n) {
  BinaryWord all_one(n);
  for (int i = 0; i < n; ++i) all_one.set(i, true);
  return LinearCode::from_rows(n, {all_one}, n, "rep(" + std::to_string(n) + ")");
}

inline LinearCode parity_check_code(int n) {
  std::vector<BinaryWord> rows;
  for (int i = 0; i + 1 < n; ++i) {
    BinaryWord r(n);
    r.set(i, true);
    r.set(n - 1, true);
    rows.push_back(r);
  }
  return LinearCode::from_rows(n, std::move(rows), 2, "spc(" + std::to_string(n) + ")");
}

inline LinearCode full_space_code(int n) {
  std::vector<BinaryWord> rows;
  for (int i = 0; i < n; ++i) {
    BinaryWord r(n);
    r.set(i, true);
    rows.push_back(r);
  }
  return LinearCode::from_rows(n, std::move(rows), 1, "full(" + std::to_string(n) + ")");
}

inline LinearCode zero_code(int n) {
  return LinearCode::from_rows(n, {}, kNoNonzeroWord, "zero(" + std::to_string(n) + ")");
}

// Direct concatenation |C1|C2|...|: codewords are independent segments.
inline LinearCode concat_codes(std::span<const LinearCode> parts, std::string label = {}) {
  int n = 0, d = kNoNonzeroWord;
  for (const auto& p : parts) {
    n += p.n();
    d = std::min(d, p.d_declared());
  }
  std::vector<BinaryWord> rows;
  int off = 0;
  for (const auto& p : parts) {
    for (const auto& r : p.generator_rows()) {
      BinaryWord row(n);
      for (int i = 0; i < p.n(); ++i)
        if (r.get(i)) row.set(off + i, true);
      rows.push_back(row);
    }
    off += p.n();
  }
  return LinearCode::from_rows(n, std::move(rows), d, std::move(label));
}

inline uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  uint64_t v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return v;
}

inline uint64_t rm_dimension(int r, int m) {
  uint64_t k = 0;
  for (int i = 0; i <= r; ++i) k += binomial(m, i);
  return k;
}

// Reed-Muller code R(r,m) built by the recursive |u0|u0+u1| construction:
// R(r,m) = {|u0|u0+u1|: u0 in R(r,m-1), u1 in R(r-1,m-1)}.
inline LinearCode rm_code(int r, int m) {
  if (r < 0 || r > m) throw std::invalid_argument("rm_code: need 0 <= r <= m");
  int n = 1 << m;
  LinearCode c;
  if (r == 0)
    c = repetition_code(n);
  else if (r == m)
    c = full_space_code(n);
  else
    c = plotkin_construction(rm_code(r, m - 1), rm_code(r - 1, m - 1));
  return c.with_label("RM(" + std::to_string(r) + "," + std::to_string(m) + ")");
}

}  // namespace plotkin
