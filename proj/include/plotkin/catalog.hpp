#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plotkin/galois_bch.hpp"
#include "plotkin/list_decoders.hpp"
#include "plotkin/ml_table.hpp"
#include "plotkin/variants.hpp"

namespace plotkin {

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

// The (4,2,2) subcode {0000, 1100, 0011, 1111} of the even-weight code.
inline LinearCode pair_repetition_code() {
  return LinearCode::from_rows(
      4, {BinaryWord::from_string("1100"), BinaryWord::from_string("0011")}, 2, "pairrep(4)");
}

// The five half-rate length-64 constructions. C_B exists in two realizations
// of its (16,8,4) middle component: two concatenated length-8 first-order
// words, or a double construction over length-4 components.
inline DoublePlotkinCode build_codes64(char which, bool b_as_double_construction = false) {
  switch (which) {
    case 'A':
      return double_plotkin(rm_code(3, 4), rm_code(2, 4), rm_code(1, 4), rm_code(0, 4), "C_A");
    case 'B': {
      LinearCode mid;
      if (b_as_double_construction) {
        mid = double_plotkin(parity_check_code(4), pair_repetition_code(), pair_repetition_code(),
                             repetition_code(4))
                  .composite()
                  .with_label("dp(16,8,4)");
      } else {
        LinearCode s8 = rm_code(1, 3);
        LinearCode segs[2] = {s8, s8};
        mid = concat_codes(segs, "|(8,4,4)|(8,4,4)|");
      }
      return double_plotkin(rm_code(2, 4), mid, mid, rm_code(1, 4),
                            b_as_double_construction ? "C_B2" : "C_B");
    }
    case 'C':
      return double_plotkin(rm_code(2, 4), rm_code(2, 4), rm_code(1, 4), rm_code(1, 4), "C_C");
    case 'D': {
      LinearCode segs[3] = {parity_check_code(6), parity_check_code(5), parity_check_code(5)};
      LinearCode c0 = concat_codes(segs, "|(6,5,2)|(5,4,2)|(5,4,2)|");
      LinearCode mid = extended_bch(4, 5);
      return double_plotkin(c0, mid, mid, extended_bch(4, 7), "C_D");
    }
    case 'E':
      return double_plotkin(parity_check_code(16), extended_bch(4, 5), extended_bch(4, 7),
                            extended_bch(4, 7), "C_E");
    default:
      throw std::invalid_argument("build_codes64: which must be A..E");
  }
}

// Half-rate family with four distinct nested components:
//   C0 = R(2v-l-3, 2v-2) = C3-dual, C3 = R(l, 2v-2),
//   C1 = R(2v-l-4, 2v-2) = C2-dual, C2 = R(l+1, 2v-2).
inline DoublePlotkinCode half_rate_family_I(int nu, int l) {
  if (nu < 3 || l < 0 || l > nu - 3)
    throw std::invalid_argument("half_rate_family_I: need nu >= 3 and 0 <= l <= nu-3");
  int m = 2 * nu - 2;
  return double_plotkin(rm_code(2 * nu - l - 3, m), rm_code(2 * nu - l - 4, m),
                        rm_code(l + 1, m), rm_code(l, m),
                        "FI(" + std::to_string(nu) + "," + std::to_string(l) + ")");
}

// Half-rate family with a concatenated middle pair:
//   C0 = R(v-1+l, 2v-2), C3 = C0-dual = R(v-2-l, 2v-2),
//   C1 = C2 = |R(v-2, 2v-3)|R(v-2, 2v-3)|.
inline DoublePlotkinCode half_rate_family_II(int nu, int l) {
  if (nu < 3 || l < 0 || l > nu - 2)
    throw std::invalid_argument("half_rate_family_II: need nu >= 3 and 0 <= l <= nu-2");
  int m = 2 * nu - 2;
  LinearCode half = rm_code(nu - 2, 2 * nu - 3);
  LinearCode segs[2] = {half, half};
  LinearCode mid = concat_codes(segs, "|" + half.label() + "|" + half.label() + "|");
  return double_plotkin(rm_code(nu - 1 + l, m), mid, mid, rm_code(nu - 2 - l, m),
                        "FII(" + std::to_string(nu) + "," + std::to_string(l) + ")");
}

// ---------------------------------------------------------------------------
// Decoder assembly
// ---------------------------------------------------------------------------

enum class SlotRole { Outer, Middle, Inner, TopLevel };

inline std::vector<VariantSpec> six_v_specs() {
  std::vector<VariantSpec> v;
  for (auto [i, j] : {std::pair{0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2}, {0, 3}})
    v.push_back({VariantFamily::V, i, j, 1});
  return v;
}

// Six two-block variants plus the two distinct four-block variants with a
// complete repetition list; measured to reach ML performance on (32,16,8).
inline std::vector<VariantSpec> mixed_eight_specs() {
  auto v = six_v_specs();
  v.push_back({VariantFamily::V4, 0, 2, 2});
  v.push_back({VariantFamily::V4, 0, 1, 2});
  return v;
}

inline DecoderPtr build_rm_decoder(int r, int m, SlotRole role);

inline std::shared_ptr<VariantBasedDecoder> build_rm_variant_decoder(int r, int m) {
  DoublePlotkinCode dp = rm_double_plotkin(r, m);
  std::array<DecoderPtr, 4> leaves = {
      build_rm_decoder(r, m - 2, SlotRole::Outer),
      build_rm_decoder(r - 1, m - 2, SlotRole::Middle),
      build_rm_decoder(r - 1, m - 2, SlotRole::Middle),
      build_rm_decoder(r - 2, m - 2, SlotRole::Inner),
  };
  DecoderPtr structural;
  std::vector<VariantSpec> specs;
  if (r == 2 && m == 5) {
    specs = mixed_eight_specs();
    structural = std::make_shared<R25StructuralList>(dp);
  } else {
    specs = six_v_specs();
  }
  return std::make_shared<VariantBasedDecoder>(DpDecoder(std::move(dp), leaves), specs,
                                               structural);
}

inline DecoderPtr build_rm_decoder(int r, int m, SlotRole role) {
  int n = 1 << m;
  if (r == m) return std::make_shared<FullSpaceLeaf>(n);
  if (r == 0) return std::make_shared<RepetitionLeaf>(n);
  if (r == m - 1) return std::make_shared<ParityLeaf>(n);
  if (r == 1) {
    // First-order codes: the four-sign-pattern realization serves the
    // innermost slot of long codes, the plotkin-view realization the rest.
    if (role == SlotRole::Inner && m >= 4)
      return std::make_shared<SimplexDoubleLeaf>(rm_code(1, m), rm_code(1, m - 2));
    return std::make_shared<SimplexPlotkinLeaf>(rm_code(1, m), rm_code(1, m - 1));
  }
  if (n <= 16) return std::make_shared<CorrEnumLeaf>(rm_code(r, m));
  return build_rm_variant_decoder(r, m);
}

// Component decoder for the explicit length-16 table codes.
inline DecoderPtr build_component_decoder16(const LinearCode& code, SlotRole role) {
  int n = code.n();
  if (code.k() == 1) return std::make_shared<RepetitionLeaf>(n);
  if (code.k() == n - 1 && code == parity_check_code(n))
    return std::make_shared<ParityLeaf>(n);
  if (code == rm_code(1, 4)) {
    if (role == SlotRole::Inner)
      return std::make_shared<SimplexDoubleLeaf>(code, rm_code(1, 2));
    return std::make_shared<SimplexPlotkinLeaf>(code, rm_code(1, 3));
  }
  return std::make_shared<CorrEnumLeaf>(code);
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string label;
  int n = 0, k = 0, d = 0;  // expected parameters
  std::string note;
  std::string default_decoder;  // variant set for double constructions
  std::function<LinearCode()> build_code;
  std::function<std::optional<DoublePlotkinCode>()> build_dp;
  std::function<DecoderPtr()> build_decoder;  // null when no decoder is wired
};

class Catalog {
 public:
  Catalog() { populate(); }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  const CatalogEntry* find(const std::string& label) const {
    for (const auto& e : entries_)
      if (e.label == label) return &e;
    return nullptr;
  }

  const CatalogEntry& at(const std::string& label) const {
    const CatalogEntry* e = find(label);
    if (!e) throw std::invalid_argument("unknown code label: " + label);
    return *e;
  }

 private:
  void add_rm(int r, int m) {
    CatalogEntry e;
    e.label = "RM(" + std::to_string(r) + "," + std::to_string(m) + ")";
    e.n = 1 << m;
    e.k = static_cast<int>(rm_dimension(r, m));
    e.d = 1 << (m - r);
    e.build_code = [r, m] { return rm_code(r, m); };
    if (r >= 2 && r <= m - 2) {
      e.build_dp = [r, m]() -> std::optional<DoublePlotkinCode> {
        return rm_double_plotkin(r, m);
      };
      if ((1 << m) > 16) {
        e.default_decoder = (r == 2 && m == 5) ? mixed_eight_string() : six_v_string();
        e.build_decoder = [r, m]() -> DecoderPtr { return build_rm_variant_decoder(r, m); };
      } else {
        e.build_decoder = [r, m]() -> DecoderPtr {
          return std::make_shared<CorrEnumLeaf>(rm_code(r, m));
        };
      }
    } else {
      e.build_decoder = [r, m]() -> DecoderPtr {
        return build_rm_decoder(r, m, SlotRole::TopLevel);
      };
    }
    entries_.push_back(std::move(e));
  }

  void add_table64(char which, bool dp_realization) {
    CatalogEntry e;
    e.label = std::string("C_") + which + (dp_realization ? "2" : "");
    e.n = 64;
    e.k = 32;
    DoublePlotkinCode dp = build_codes64(which, dp_realization);
    e.d = dp.composite().d_declared();
    e.note = "components " + component_summary(dp);
    e.default_decoder = list8_string();
    e.build_code = [which, dp_realization] {
      return build_codes64(which, dp_realization).composite();
    };
    e.build_dp = [which, dp_realization]() -> std::optional<DoublePlotkinCode> {
      return build_codes64(which, dp_realization);
    };
    e.build_decoder = [which, dp_realization]() -> DecoderPtr {
      return build_table64_decoder(which, dp_realization);
    };
    entries_.push_back(std::move(e));
  }

  void add_family(int family, int nu, int l, const std::string& alias = "") {
    CatalogEntry e;
    DoublePlotkinCode dp = family == 1 ? half_rate_family_I(nu, l) : half_rate_family_II(nu, l);
    e.label = alias.empty() ? dp.label() : alias;
    e.n = dp.n();
    e.k = dp.k();
    e.d = dp.composite().d_declared();
    e.note = "components " + component_summary(dp);
    e.default_decoder = list8_string();
    e.build_code = [family, nu, l] {
      return (family == 1 ? half_rate_family_I(nu, l) : half_rate_family_II(nu, l)).composite();
    };
    e.build_dp = [family, nu, l]() -> std::optional<DoublePlotkinCode> {
      return family == 1 ? half_rate_family_I(nu, l) : half_rate_family_II(nu, l);
    };
    if (nu <= 4) {
      e.build_decoder = [family, nu, l]() -> DecoderPtr {
        return build_family_decoder(family, nu, l);
      };
    }
    entries_.push_back(std::move(e));
  }

  static std::string component_summary(const DoublePlotkinCode& dp) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
      const LinearCode& c = dp.component(i);
      s += "(" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," +
           std::to_string(c.d_declared()) + ")";
      if (i < 3) s += ",";
    }
    return s;
  }

  static std::string six_v_string() {
    return "v(0,1);v(2,3);v(0,2);v(1,3);v(1,2);v(0,3)";
  }
  static std::string mixed_eight_string() { return six_v_string() + ";v4(0,2)xL2;v4(0,1)xL2"; }
  static std::string list8_string() {
    return "v(0,1)xL8;v(2,3)xL8;v(0,2)xL8;v(1,3)xL8;v(1,2)xL8;v(0,3)xL8;v4(0,2)xL8;v4(0,1)xL8";
  }

  static DecoderPtr build_table64_decoder(char which, bool dp_realization) {
    DoublePlotkinCode dp = build_codes64(which, dp_realization);
    std::array<DecoderPtr, 4> leaves;
    for (int i = 0; i < 4; ++i) {
      SlotRole role = i == 0 ? SlotRole::Outer : (i == 3 ? SlotRole::Inner : SlotRole::Middle);
      leaves[i] = build_table64_component(dp.component(i), which, dp_realization, role);
    }
    auto specs = parse_specs_for_relations(dp);
    return std::make_shared<VariantBasedDecoder>(DpDecoder(dp, leaves), specs);
  }

  static DecoderPtr build_table64_component(const LinearCode& code, char which,
                                            bool dp_realization, SlotRole role) {
    if (which == 'B' && code.k() == 8) {
      if (dp_realization) {
        DoublePlotkinCode mid =
            double_plotkin(parity_check_code(4), pair_repetition_code(), pair_repetition_code(),
                           repetition_code(4));
        std::array<DecoderPtr, 4> leaves = {
            std::make_shared<ParityLeaf>(4),
            std::make_shared<CorrEnumLeaf>(pair_repetition_code()),
            std::make_shared<CorrEnumLeaf>(pair_repetition_code()),
            std::make_shared<RepetitionLeaf>(4),
        };
        return std::make_shared<VariantBasedDecoder>(DpDecoder(std::move(mid), leaves),
                                                     six_v_specs());
      }
      LinearCode s8 = rm_code(1, 3);
      std::vector<DecoderPtr> segs = {
          std::make_shared<SimplexPlotkinLeaf>(s8, rm_code(1, 2)),
          std::make_shared<SimplexPlotkinLeaf>(s8, rm_code(1, 2)),
      };
      return std::make_shared<ConcatLeaf>(code, std::move(segs));
    }
    if (which == 'D' && code.k() == 13) {
      std::vector<DecoderPtr> segs = {std::make_shared<ParityLeaf>(6),
                                      std::make_shared<ParityLeaf>(5),
                                      std::make_shared<ParityLeaf>(5)};
      return std::make_shared<ConcatLeaf>(code, std::move(segs));
    }
    return build_component_decoder16(code, role);
  }

  static DecoderPtr build_family_decoder(int family, int nu, int l) {
    DoublePlotkinCode dp = family == 1 ? half_rate_family_I(nu, l) : half_rate_family_II(nu, l);
    int m = 2 * nu - 2;
    auto rm_slot = [m](int r, SlotRole role) { return build_rm_decoder(r, m, role); };
    std::array<DecoderPtr, 4> leaves;
    if (family == 1) {
      leaves = {rm_slot(2 * nu - l - 3, SlotRole::Outer), rm_slot(2 * nu - l - 4, SlotRole::Middle),
                rm_slot(l + 1, SlotRole::Middle), rm_slot(l, SlotRole::Inner)};
    } else {
      DecoderPtr half = build_rm_decoder(nu - 2, 2 * nu - 3, SlotRole::TopLevel);
      std::vector<DecoderPtr> segs = {half, half};
      DecoderPtr mid = std::make_shared<ConcatLeaf>(dp.component(1), std::move(segs));
      leaves = {rm_slot(nu - 1 + l, SlotRole::Outer), mid, mid, rm_slot(nu - 2 - l, SlotRole::Inner)};
    }
    auto specs = parse_specs_for_relations(dp);
    return std::make_shared<VariantBasedDecoder>(DpDecoder(dp, leaves), specs);
  }

  // All six two-block variants plus the two four-block ones, with list 8;
  // the V0 family is left to explicit requests.
  static std::vector<VariantSpec> parse_specs_for_relations(const DoublePlotkinCode& dp) {
    std::vector<VariantSpec> specs;
    if (dp.relations().c3_in_c2 && dp.relations().c2_in_c1) {
      for (auto [i, j] : {std::pair{0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2}, {0, 3}})
        specs.push_back({VariantFamily::V, i, j, 8});
    }
    specs.push_back({VariantFamily::V4, 0, 2, 8});
    specs.push_back({VariantFamily::V4, 0, 1, 8});
    return specs;
  }

  void populate() {
    for (int m = 0; m <= 7; ++m)
      for (int r = 0; r <= m; ++r) add_rm(r, m);
    for (char which : {'A', 'B', 'C', 'D', 'E'}) add_table64(which, false);
    add_table64('B', true);
    add_family(1, 3, 0);
    add_family(1, 4, 0);
    add_family(1, 4, 1);
    add_family(1, 4, 1, "C_I");
    add_family(2, 3, 0);
    add_family(2, 3, 1);
    add_family(2, 4, 0);
    add_family(2, 4, 0, "C_IIb");
    add_family(2, 4, 1);
    add_family(2, 4, 1, "C_IIa");
    add_family(2, 4, 2);
  }

  std::vector<CatalogEntry> entries_;
};

}  // namespace plotkin
