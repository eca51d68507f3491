#pragma once

#include <array>
#include <string>
#include <utility>

#include "plotkin/linear_code.hpp"

namespace plotkin {

struct SubcodeRelations {
  bool c3_in_c2 = false;
  bool c2_in_c1 = false;
  bool c1_in_c0 = false;
  bool c1_eq_c2 = false;
};

// Two nested |u|u+v| steps over four component codes of equal length n:
//   |u0|u0+u1|u0+u2|u0+u1+u2+u3|
// A word |a0|a1|a2|a3| belongs to the composite iff a0 in C0, a0+a1 in C1,
// a0+a2 in C2, and a0+a1+a2+a3 in C3.
class DoublePlotkinCode {
 public:
  static DoublePlotkinCode make(LinearCode c0, LinearCode c1, LinearCode c2, LinearCode c3,
                                std::string label = {}) {
    int n = c0.n();
    if (c1.n() != n || c2.n() != n || c3.n() != n)
      throw std::invalid_argument("double_plotkin: length mismatch");
    DoublePlotkinCode dp;
    dp.c_ = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
    dp.rel_.c3_in_c2 = dp.c_[3].is_subcode_of(dp.c_[2]);
    dp.rel_.c2_in_c1 = dp.c_[2].is_subcode_of(dp.c_[1]);
    dp.rel_.c1_in_c0 = dp.c_[1].is_subcode_of(dp.c_[0]);
    dp.rel_.c1_eq_c2 = dp.c_[1] == dp.c_[2];
    dp.composite_ =
        plotkin_construction(plotkin_construction(dp.c_[0], dp.c_[1]), plotkin_construction(dp.c_[2], dp.c_[3])).with_label(label);
    dp.label_ = std::move(label);
    return dp;
  }

  const LinearCode& component(int i) const { return c_[i]; }
  const LinearCode& composite() const { return composite_; }
  const SubcodeRelations& relations() const { return rel_; }
  const std::string& label() const { return label_; }
  int block_len() const { return c_[0].n(); }

  int k() const { return c_[0].k() + c_[1].k() + c_[2].k() + c_[3].k(); }
  int n() const { return 4 * c_[0].n(); }

  // Information layout: info = info0 || info1 || info2 || info3.
  BinaryWord encode(const BinaryWord& info) const {
    if (info.len() != k()) throw std::invalid_argument("encode: info length mismatch");
    std::array<BinaryWord, 4> u;
    int off = 0;
    for (int i = 0; i < 4; ++i) {
      u[i] = c_[i].encode(info.slice(off, off + c_[i].k()));
      off += c_[i].k();
    }
    std::array<BinaryWord, 4> blocks = {u[0], u[0] ^ u[1], u[0] ^ u[2],
                                        u[0] ^ u[1] ^ u[2] ^ u[3]};
    return BinaryWord::concat(blocks);
  }

  // Component codewords u0..u3 for the same information layout.
  std::array<BinaryWord, 4> encode_components(const BinaryWord& info) const {
    if (info.len() != k()) throw std::invalid_argument("encode_components: info length mismatch");
    std::array<BinaryWord, 4> u;
    int off = 0;
    for (int i = 0; i < 4; ++i) {
      u[i] = c_[i].encode(info.slice(off, off + c_[i].k()));
      off += c_[i].k();
    }
    return u;
  }

  bool contains(const BinaryWord& w) const { return composite_.contains(w); }

  // Membership via the block conditions instead of the composite generator.
  bool contains_structurally(const BinaryWord& w) const {
    if (w.len() != n()) throw std::invalid_argument("contains_structurally: length mismatch");
    int nb = block_len();
    BinaryWord a0 = w.slice(0, nb);
    BinaryWord a1 = w.slice(nb, 2 * nb);
    BinaryWord a2 = w.slice(2 * nb, 3 * nb);
    BinaryWord a3 = w.slice(3 * nb, 4 * nb);
    return c_[0].contains(a0) && c_[1].contains(a0 ^ a1) && c_[2].contains(a0 ^ a2) &&
           c_[3].contains(a0 ^ a1 ^ a2 ^ a3);
  }

 private:
  std::array<LinearCode, 4> c_;
  SubcodeRelations rel_;
  LinearCode composite_;
  std::string label_;
};

inline DoublePlotkinCode double_plotkin(LinearCode c0, LinearCode c1, LinearCode c2,
                                        LinearCode c3, std::string label = {}) {
  return DoublePlotkinCode::make(std::move(c0), std::move(c1), std::move(c2), std::move(c3),
                                 std::move(label));
}

// R(r,m) with 2 <= r <= m-2 viewed as a double construction over m-2.
inline DoublePlotkinCode rm_double_plotkin(int r, int m) {
  if (r < 2 || r > m - 2) throw std::invalid_argument("rm_double_plotkin: need 2 <= r <= m-2");
  return double_plotkin(rm_code(r, m - 2), rm_code(r - 1, m - 2), rm_code(r - 1, m - 2),
                        rm_code(r - 2, m - 2),
                        "RM(" + std::to_string(r) + "," + std::to_string(m) + ")");
}

}  // namespace plotkin
