#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

#include "plotkin/channel.hpp"
#include "plotkin/op_counter.hpp"

namespace plotkin {

// sign(0) := +1, consistent with "value >= 0 decodes to bit 0".
inline double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Four equal-length blocks partitioning a received vector in order.
struct Blocks4 {
  std::array<SoftWord, 4> y;

  static Blocks4 split(const SoftWord& full) {
    if (full.len() % 4 != 0) throw std::invalid_argument("Blocks4: length not divisible by 4");
    int n = full.len() / 4;
    Blocks4 b;
    for (int i = 0; i < 4; ++i) {
      b.y[i] = SoftWord(n);
      for (int j = 0; j < n; ++j) b.y[i].v[j] = full.v[i * n + j];
    }
    return b;
  }

  int block_len() const { return y[0].len(); }
};

namespace detail {
inline void check_equal_len(const SoftWord& a, const SoftWord& b, const char* who) {
  if (a.len() != b.len()) throw std::invalid_argument(std::string(who) + ": length mismatch");
}
}  // namespace detail

// a(i) join b(i) = sign(a_i * b_i) * min(|a_i|, |b_i|).
// Costs n signs and n comparisons.
inline SoftWord join(const SoftWord& a, const SoftWord& b, OpCounter& ctr) {
  detail::check_equal_len(a, b, "join");
  int n = a.len();
  SoftWord r(n);
  for (int i = 0; i < n; ++i)
    r.v[i] = sgn(a.v[i] * b.v[i]) * std::min(std::fabs(a.v[i]), std::fabs(b.v[i]));
  ctr.signs += n;
  ctr.comparisons += n;
  return r;
}

// a join (b * x) with the known word folded into the sign computation; same
// cost as a plain join.
inline SoftWord join_scaled(const SoftWord& a, const SoftWord& b, const ModulatedWord& x,
                            OpCounter& ctr) {
  detail::check_equal_len(a, b, "join_scaled");
  if (x.len() != a.len()) throw std::invalid_argument("join_scaled: length mismatch");
  int n = a.len();
  SoftWord r(n);
  for (int i = 0; i < n; ++i)
    r.v[i] = sgn(a.v[i] * b.v[i] * x.s[i]) * std::min(std::fabs(a.v[i]), std::fabs(b.v[i]));
  ctr.signs += n;
  ctr.comparisons += n;
  return r;
}

// Folded join of two or more blocks; k blocks cost (k-1)*n signs and
// (k-1)*n comparisons.
inline SoftWord join_many(std::span<const SoftWord> blocks, OpCounter& ctr) {
  if (blocks.size() < 2) throw std::invalid_argument("join_many: need at least two blocks");
  SoftWord r = join(blocks[0], blocks[1], ctr);
  for (size_t i = 2; i < blocks.size(); ++i) r = join(r, blocks[i], ctr);
  return r;
}

// y_i * x_i elementwise with x_i = +-1; costs n sign operations.
inline SoftWord scale_by_codeword(const SoftWord& y, const ModulatedWord& x, OpCounter& ctr) {
  if (x.len() != y.len()) throw std::invalid_argument("scale_by_codeword: length mismatch");
  int n = y.len();
  SoftWord r(n);
  for (int i = 0; i < n; ++i) r.v[i] = y.v[i] * x.s[i];
  ctr.signs += n;
  return r;
}

// Elementwise sum of blocks already scaled by the caller; k blocks cost
// (k-1)*n additions.
inline SoftWord add_blocks(std::span<const SoftWord> blocks, OpCounter& ctr) {
  if (blocks.size() < 2) throw std::invalid_argument("add_blocks: need at least two blocks");
  int n = blocks[0].len();
  for (const auto& b : blocks) detail::check_equal_len(blocks[0], b, "add_blocks");
  SoftWord r = blocks[0];
  for (size_t i = 1; i < blocks.size(); ++i)
    for (int j = 0; j < n; ++j) r.v[j] += blocks[i].v[j];
  ctr.additions += static_cast<uint64_t>(blocks.size() - 1) * n;
  return r;
}

// (a join b) + (c join d*x): two noisy versions of the same hidden word are
// combined; costs 2n signs, 2n comparisons, n additions.
inline SoftWord join_add(const SoftWord& a, const SoftWord& b, const SoftWord& c,
                         const SoftWord& d, const ModulatedWord& x, OpCounter& ctr) {
  SoftWord left = join(a, b, ctr);
  SoftWord right = join_scaled(c, d, x, ctr);
  int n = left.len();
  SoftWord r(n);
  for (int i = 0; i < n; ++i) r.v[i] = left.v[i] + right.v[i];
  ctr.additions += n;
  return r;
}

// (a + b*xb) join (c + d*xd): costs n signs, n comparisons, 2n additions.
inline SoftWord add_join(const SoftWord& a, const SoftWord& b, const ModulatedWord& xb,
                         const SoftWord& c, const SoftWord& d, const ModulatedWord& xd,
                         OpCounter& ctr) {
  detail::check_equal_len(a, b, "add_join");
  detail::check_equal_len(c, d, "add_join");
  int n = a.len();
  SoftWord left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left.v[i] = a.v[i] + b.v[i] * xb.s[i];
    right.v[i] = c.v[i] + d.v[i] * xd.s[i];
  }
  ctr.additions += 2 * static_cast<uint64_t>(n);
  SoftWord r(n);
  for (int i = 0; i < n; ++i)
    r.v[i] = sgn(left.v[i] * right.v[i]) * std::min(std::fabs(left.v[i]), std::fabs(right.v[i]));
  ctr.signs += n;
  ctr.comparisons += n;
  return r;
}

// Canonical block layouts over |y0|y1|y2|y3|.
inline SoftWord join_add(const Blocks4& b, const ModulatedWord& known_x3, OpCounter& ctr) {
  return join_add(b.y[0], b.y[1], b.y[2], b.y[3], known_x3, ctr);
}

inline SoftWord add_join(const Blocks4& b, const ModulatedWord& known_x2,
                         const ModulatedWord& known_x3, OpCounter& ctr) {
  return add_join(b.y[0], b.y[2], known_x2, b.y[1], b.y[3], known_x2 * known_x3, ctr);
}

// Correlation of a +-1 word with a received vector: n-1 additions, n signs.
inline double correlation(const ModulatedWord& x, const SoftWord& y, OpCounter& ctr) {
  if (x.len() != y.len()) throw std::invalid_argument("correlation: length mismatch");
  double phi = 0.0;
  for (int i = 0; i < x.len(); ++i) phi += x.s[i] * y.v[i];
  ctr.signs += x.len();
  ctr.additions += x.len() > 0 ? x.len() - 1 : 0;
  return phi;
}

inline double correlation(const ModulatedWord& x, const SoftWord& y) {
  OpCounter scratch;
  return correlation(x, y, scratch);
}

// Correlation of the full-length decision against the full received vector,
// computed from the already available combined sum w of the four blocks.
inline double correlation_via_add_four(const ModulatedWord& x0_hat, const SoftWord& w,
                                       OpCounter& ctr) {
  return correlation(x0_hat, w, ctr);
}

}  // namespace plotkin
