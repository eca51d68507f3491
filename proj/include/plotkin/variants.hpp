#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plotkin/leaf_decoders.hpp"

namespace plotkin {

enum class VariantFamily { V4, V, V0 };

// One decoder realization, named by the hidden code word it decodes first:
// V4 starts from the joined four blocks, V from one of the six two-block
// joins, V0 from per-block list decoding of the outermost component.
struct VariantSpec {
  VariantFamily family = VariantFamily::V;
  int i = 0, j = 1;
  int list_size = 1;

  std::string to_string() const {
    std::string base;
    switch (family) {
      case VariantFamily::V4: base = "v4"; break;
      case VariantFamily::V: base = "v"; break;
      case VariantFamily::V0: base = "v0"; break;
    }
    base += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (list_size > 1) base += "xL" + std::to_string(list_size);
    return base;
  }

  friend bool operator==(const VariantSpec& a, const VariantSpec& b) {
    return a.family == b.family && a.i == b.i && a.j == b.j && a.list_size == b.list_size;
  }
};

// The three canonical first joins; the complementary pairs produce the same
// decoder and are folded onto these.
inline std::pair<int, int> normalize_v4_pair(int i, int j, bool* changed = nullptr) {
  if (i > j) std::swap(i, j);
  std::pair<int, int> p{i, j};
  bool c = false;
  if (p == std::pair<int, int>{1, 3}) p = {0, 2}, c = true;
  if (p == std::pair<int, int>{2, 3}) p = {0, 1}, c = true;
  if (p == std::pair<int, int>{0, 3}) p = {1, 2}, c = true;
  if (changed) *changed = c;
  return p;
}

struct StepRecord {
  std::string name;
  OpCounter delta;
};
using StepLog = std::vector<StepRecord>;

namespace detail {

using Mask = uint8_t;  // bit i set: the product contains x_i
constexpr Mask kBlockMask[4] = {0b0001, 0b0011, 0b0101, 0b1111};
constexpr Mask M0 = 0b0001, M1 = 0b0010, M2 = 0b0100, M3 = 0b1000;

struct ScaleRef {
  std::vector<Mask> factors;  // product of known words
};

struct VariantStep {
  enum class Kind { Join2, JoinAdd, AddJoin, Add4, Derive };
  Kind kind = Kind::Join2;
  int a = -1, b = -1, c = -1, d = -1;  // block indices
  ScaleRef b_scale, d_scale;           // known-word products applied to b / d
  int target = -1;                     // component decoder index
  Mask out = 0;                        // mask of the decoded (or derived) word
  Mask from1 = 0, from2 = 0;           // Derive: out = from1 * from2
};

struct FirstStep {
  enum class Kind { Join4, Join2, PairLists };
  Kind kind = Kind::Join2;
  int bi = 0, bj = 1;
  int target = -1;  // decoded component (Join4/Join2)
  Mask out = 0;
  int gamma = -1;  // PairLists: component whose membership filters pairs
  Mask prod = 0;   // PairLists: mask of the pair product
};

struct VariantProgram {
  FirstStep first;
  std::vector<VariantStep> rest;
  bool ends_with_add4 = false;
};

inline VariantStep join2_step(int a, int b, std::vector<Mask> b_factors, int target, Mask out) {
  VariantStep s;
  s.kind = VariantStep::Kind::Join2;
  s.a = a;
  s.b = b;
  s.b_scale.factors = std::move(b_factors);
  s.target = target;
  s.out = out;
  return s;
}

inline VariantStep joinadd_step(int a, int b, int c, int d, std::vector<Mask> d_factors,
                                int target, Mask out) {
  VariantStep s;
  s.kind = VariantStep::Kind::JoinAdd;
  s.a = a;
  s.b = b;
  s.c = c;
  s.d = d;
  s.d_scale.factors = std::move(d_factors);
  s.target = target;
  s.out = out;
  return s;
}

inline VariantStep addjoin_step(int a, int b, std::vector<Mask> b_factors, int c, int d,
                                std::vector<Mask> d_factors, int target, Mask out) {
  VariantStep s;
  s.kind = VariantStep::Kind::AddJoin;
  s.a = a;
  s.b = b;
  s.c = c;
  s.d = d;
  s.b_scale.factors = std::move(b_factors);
  s.d_scale.factors = std::move(d_factors);
  s.target = target;
  s.out = out;
  return s;
}

inline VariantStep add4_step() {
  VariantStep s;
  s.kind = VariantStep::Kind::Add4;
  s.target = 0;
  s.out = M0;
  return s;
}

inline VariantStep derive_step(Mask out, Mask from1, Mask from2) {
  VariantStep s;
  s.kind = VariantStep::Kind::Derive;
  s.out = out;
  s.from1 = from1;
  s.from2 = from2;
  return s;
}

// Step lists transcribed per variant; each step's output mask follows from
// xoring the block masks and applied scale masks of its inputs.
inline VariantProgram build_program(const VariantSpec& spec) {
  VariantProgram p;
  auto pair_key = [&](int i, int j) { return i * 10 + j; };
  if (spec.family == VariantFamily::V4) {
    p.first.kind = FirstStep::Kind::Join4;
    p.first.target = 3;
    p.first.out = M3;
    switch (pair_key(spec.i, spec.j)) {
      case 2:  // (0,2)
        p.rest = {joinadd_step(0, 2, 1, 3, {M3}, 2, M2),
                  addjoin_step(0, 2, {M2}, 1, 3, {M2, M3}, 1, M1), add4_step()};
        break;
      case 1:  // (0,1)
        p.rest = {joinadd_step(0, 1, 2, 3, {M3}, 1, M1),
                  addjoin_step(0, 1, {M1}, 2, 3, {M1, M3}, 2, M2), add4_step()};
        break;
      case 12:  // (1,2)
        p.rest = {joinadd_step(1, 2, 0, 3, {M3}, 1, Mask(M1 | M2)),
                  addjoin_step(0, 3, {Mask(M1 | M2), M3}, 1, 2, {Mask(M1 | M2)}, 1, M1),
                  derive_step(M2, Mask(M1 | M2), M1), add4_step()};
        break;
      default:
        throw std::invalid_argument("variant: invalid v4 pair");
    }
    p.ends_with_add4 = true;
    return p;
  }

  // V and V0 share the continuation; V0 replaces the first join by per-block
  // lists and does not re-decode the outermost component.
  bool v0 = spec.family == VariantFamily::V0;
  switch (pair_key(spec.i, spec.j)) {
    case 1:  // (0,1): first decodes x1
      p.first = {FirstStep::Kind::Join2, 0, 1, 1, M1};
      p.rest = {join2_step(2, 3, {M1}, 3, M3),
                addjoin_step(0, 1, {M1}, 2, 3, {M1, M3}, 2, M2)};
      break;
    case 2:  // (0,2): first decodes x2
      p.first = {FirstStep::Kind::Join2, 0, 2, 2, M2};
      p.rest = {join2_step(1, 3, {M2}, 3, M3),
                addjoin_step(0, 2, {M2}, 1, 3, {M2, M3}, 1, M1)};
      break;
    case 3:  // (0,3): first decodes x1x2x3
      p.first = {FirstStep::Kind::Join2, 0, 3, 1, Mask(M1 | M2 | M3)};
      p.rest = {join2_step(1, 2, {Mask(M1 | M2 | M3)}, 3, M3),
                derive_step(Mask(M1 | M2), Mask(M1 | M2 | M3), M3),
                addjoin_step(0, 3, {Mask(M1 | M2 | M3)}, 1, 2, {Mask(M1 | M2)}, 1, M1),
                derive_step(M2, Mask(M1 | M2), M1)};
      break;
    case 12:  // (1,2): first decodes x1x2
      p.first = {FirstStep::Kind::Join2, 1, 2, 1, Mask(M1 | M2)};
      p.rest = {join2_step(0, 3, {Mask(M1 | M2)}, 3, M3),
                addjoin_step(0, 3, {Mask(M1 | M2), M3}, 1, 2, {Mask(M1 | M2)}, 1, M1),
                derive_step(M2, Mask(M1 | M2), M1)};
      break;
    case 13:  // (1,3): first decodes x2x3
      p.first = {FirstStep::Kind::Join2, 1, 3, 2, Mask(M2 | M3)};
      p.rest = {join2_step(0, 2, {Mask(M2 | M3)}, 3, M3),
                derive_step(M2, Mask(M2 | M3), M3),
                addjoin_step(0, 2, {M2}, 1, 3, {Mask(M2 | M3)}, 1, M1)};
      break;
    case 23:  // (2,3): first decodes x1x3
      p.first = {FirstStep::Kind::Join2, 2, 3, 1, Mask(M1 | M3)};
      p.rest = {join2_step(0, 1, {Mask(M1 | M3)}, 3, M3),
                derive_step(M1, Mask(M1 | M3), M3),
                addjoin_step(0, 1, {M1}, 2, 3, {Mask(M1 | M3)}, 2, M2)};
      break;
    default:
      throw std::invalid_argument("variant: invalid pair");
  }

  if (!v0) {
    p.rest.push_back(add4_step());
    p.ends_with_add4 = true;
    return p;
  }

  // V0: the first step becomes pair list decoding with a membership filter.
  p.first.kind = FirstStep::Kind::PairLists;
  p.first.target = 0;
  p.first.prod = Mask(kBlockMask[p.first.bi] ^ kBlockMask[p.first.bj]);
  // Products with components 1..3 only sit in C1 or C2 by the hidden-word
  // correspondence; the filter component matches the decoded product.
  p.first.gamma = (p.first.prod == M2 || p.first.prod == Mask(M2 | M3)) ? 2 : 1;
  p.first.out = 0;
  // Recover the outermost word from the list entries when the pair misses
  // block 0.
  switch (pair_key(spec.i, spec.j)) {
    case 12: p.rest.push_back(derive_step(M0, kBlockMask[1], M1)); break;
    case 13: p.rest.push_back(derive_step(M0, kBlockMask[1], M1)); break;
    case 23: p.rest.push_back(derive_step(M0, kBlockMask[2], M2)); break;
    default: break;  // block 0 is in the pair, x0 comes straight from its list
  }
  p.ends_with_add4 = false;
  return p;
}

}  // namespace detail

// Words known to a genie run: the transmitted hidden code word of the first
// decoding step, keyed by its product mask.
struct GenieFirstStep {
  detail::Mask mask = 0;
  ModulatedWord word;
};

// Variant-based decoder for one double construction: executes the selected
// variants, assembles full-length decisions, and selects by correlation.
class DpDecoder {
 public:
  DpDecoder(DoublePlotkinCode dp, std::array<DecoderPtr, 4> leaves)
      : dp_(std::move(dp)), leaves_(std::move(leaves)) {
    for (int i = 0; i < 4; ++i)
      if (!leaves_[i] || leaves_[i]->code().n() != dp_.block_len())
        throw std::invalid_argument("DpDecoder: leaf decoder mismatch");
  }

  const DoublePlotkinCode& dp() const { return dp_; }
  const DecoderPtr& leaf(int i) const { return leaves_[i]; }

  void validate_spec(const VariantSpec& spec) const {
    if (spec.i == spec.j || spec.i < 0 || spec.j > 3 || spec.i > spec.j)
      throw std::invalid_argument("variant: invalid pair");
    if (spec.list_size < 1) throw std::invalid_argument("variant: list size must be >= 1");
    const auto& rel = dp_.relations();
    if (spec.family == VariantFamily::V4) {
      if (!(std::pair(spec.i, spec.j) == std::pair(0, 1) ||
            std::pair(spec.i, spec.j) == std::pair(0, 2) ||
            std::pair(spec.i, spec.j) == std::pair(1, 2)))
        throw std::invalid_argument("variant: v4 pair must be one of (0,1),(0,2),(1,2)");
      return;  // no subcode structure required
    }
    if (!(rel.c3_in_c2 && rel.c2_in_c1))
      throw std::invalid_argument("variant: requires C3 within C2 within C1");
    if (spec.family == VariantFamily::V0 && !rel.c1_in_c0)
      throw std::invalid_argument("variant: v0 requires C1 within C0");
  }

  std::vector<DecodeOutcome> decode_variant(const SoftWord& y, const VariantSpec& spec,
                                            OpCounter& ctr,
                                            const GenieFirstStep* genie = nullptr,
                                            StepLog* log = nullptr) const {
    validate_spec(spec);
    const detail::VariantProgram prog = detail::build_program(spec);
    Blocks4 b = Blocks4::split(y);
    using Known = std::array<std::optional<ModulatedWord>, 16>;

    std::vector<Known> seeds;
    OpCounter before = ctr;
    switch (prog.first.kind) {
      case detail::FirstStep::Kind::Join4: {
        std::array<SoftWord, 4> blocks = b.y;
        SoftWord w = join_many(std::span<const SoftWord>(blocks.data(), 4), ctr);
        record(log, "join-four", ctr, before);
        seeds = first_decode(prog, w, spec.list_size, ctr, genie, log);
        break;
      }
      case detail::FirstStep::Kind::Join2: {
        SoftWord w = join(b.y[prog.first.bi], b.y[prog.first.bj], ctr);
        record(log, "join-two", ctr, before);
        seeds = first_decode(prog, w, spec.list_size, ctr, genie, log);
        break;
      }
      case detail::FirstStep::Kind::PairLists: {
        if (genie) throw std::invalid_argument("genie runs support v and v4 variants only");
        auto li = leaves_[0]->decode_list(b.y[prog.first.bi], spec.list_size, ctr);
        auto lj = leaves_[0]->decode_list(b.y[prog.first.bj], spec.list_size, ctr);
        record(log, "block lists", ctr, before);
        const LinearCode& gamma_code = leaves_[prog.first.gamma]->code();
        for (const auto& oi : li) {
          for (const auto& oj : lj) {
            ModulatedWord prod = oi.word * oj.word;
            if (!gamma_code.contains(demodulate(prod))) continue;
            Known k{};
            k[detail::kBlockMask[prog.first.bi]] = oi.word;
            k[detail::kBlockMask[prog.first.bj]] = oj.word;
            k[prog.first.prod] = prod;
            seeds.push_back(std::move(k));
          }
        }
        break;
      }
    }

    std::vector<DecodeOutcome> out;
    if (seeds.empty()) {
      DecodeOutcome fail;
      fail.failed = true;
      out.push_back(std::move(fail));
      return out;
    }
    for (auto& known : seeds) out.push_back(run_continuation(prog, b, y, known, ctr, log));
    return out;
  }

  // Runs all variants and keeps the valid decision with largest correlation;
  // ties go to the earlier variant and earlier list entry.
  DecodeOutcome decode_multi(const SoftWord& y, std::span<const VariantSpec> specs,
                             OpCounter& ctr, StepLog* log = nullptr) const {
    if (specs.empty()) throw std::invalid_argument("decode_multi: no variants");
    OpCounter before = ctr;
    std::vector<DecodeOutcome> all;
    for (size_t s = 0; s < specs.size(); ++s) {
      auto outs = decode_variant(y, specs[s], ctr, nullptr, log);
      for (auto& o : outs) {
        o.variant_index = static_cast<int>(s);
        all.push_back(std::move(o));
      }
    }
    OpCounter before_sel = ctr;
    DecodeOutcome best = select_best(all, ctr);
    record(log, "select best", ctr, before_sel);
    best.ops = ctr - before;
    return best;
  }

  DecodeOutcome decode_genie(const SoftWord& y, const VariantSpec& spec,
                             const GenieFirstStep& genie, OpCounter& ctr) const {
    OpCounter before = ctr;
    auto outs = decode_variant(y, spec, ctr, &genie, nullptr);
    DecodeOutcome best = select_best(outs, ctr);
    best.ops = ctr - before;
    return best;
  }

  // Per-block list decoding with membership filters on both plotkin halves
  // and on the four-block product; returns all surviving composite words
  // sorted by correlation.
  std::vector<DecodeOutcome> dp_list_decode(const SoftWord& y, int list_size,
                                            OpCounter& ctr) const {
    const auto& rel = dp_.relations();
    if (!(rel.c3_in_c2 && rel.c2_in_c1 && rel.c1_in_c0))
      throw std::invalid_argument("dp_list_decode: requires the full subcode chain");
    Blocks4 b = Blocks4::split(y);
    std::array<std::vector<DecodeOutcome>, 4> lists;
    for (int i = 0; i < 4; ++i) lists[i] = leaves_[0]->decode_list(b.y[i], list_size, ctr);
    const LinearCode& c1 = leaves_[1]->code();
    const LinearCode& c3 = leaves_[3]->code();
    struct HalfWord {
      const ModulatedWord* left;
      const ModulatedWord* right;
    };
    std::vector<HalfWord> left_pairs, right_pairs;
    for (const auto& o0 : lists[0])
      for (const auto& o1 : lists[1])
        if (c1.contains(demodulate(o0.word * o1.word))) left_pairs.push_back({&o0.word, &o1.word});
    for (const auto& o2 : lists[2])
      for (const auto& o3 : lists[3])
        if (c1.contains(demodulate(o2.word * o3.word)))
          right_pairs.push_back({&o2.word, &o3.word});
    std::vector<DecodeOutcome> survivors;
    int nb = dp_.block_len();
    for (const auto& lp : left_pairs) {
      for (const auto& rp : right_pairs) {
        ModulatedWord all = (*lp.left) * (*lp.right) * (*rp.left) * (*rp.right);
        if (!c3.contains(demodulate(all))) continue;
        DecodeOutcome o;
        o.word = ModulatedWord(4 * nb);
        for (int i = 0; i < nb; ++i) {
          o.word.s[i] = (*lp.left).s[i];
          o.word.s[nb + i] = (*lp.right).s[i];
          o.word.s[2 * nb + i] = (*rp.left).s[i];
          o.word.s[3 * nb + i] = (*rp.right).s[i];
        }
        o.correlation = correlation(o.word, y, ctr);
        survivors.push_back(std::move(o));
      }
    }
    if (survivors.size() > 1) {
      ctr.comparisons +=
          detail::selection_comparisons(static_cast<int>(survivors.size()),
                                        static_cast<int>(survivors.size()));
      std::stable_sort(survivors.begin(), survivors.end(),
                       [](const DecodeOutcome& a, const DecodeOutcome& b) {
                         return a.correlation > b.correlation;
                       });
    }
    return survivors;
  }

  // Decodes the pair-joined word |y_a join y_b | y_c join y_d| as a plotkin
  // word of (C_t, C3), then finishes with the usual add-join and the final
  // combined sum.
  DecodeOutcome combo_decode(const SoftWord& y, std::pair<int, int> p1, std::pair<int, int> p2,
                             OpCounter& ctr, int list_size = 1) const {
    using detail::kBlockMask;
    OpCounter before = ctr;
    int a = p1.first, bq = p1.second, c = p2.first, d = p2.second;
    std::array<bool, 4> seen{};
    for (int x : {a, bq, c, d}) {
      if (x < 0 || x > 3 || seen[x]) throw std::invalid_argument("combo: invalid block pairs");
      seen[x] = true;
    }
    detail::Mask m1 = detail::Mask(kBlockMask[a] ^ kBlockMask[bq]);
    detail::Mask m2 = detail::Mask(kBlockMask[c] ^ kBlockMask[d]);
    if (detail::Mask(m1 ^ m2) != detail::M3)
      throw std::invalid_argument("combo: pairs must differ by the innermost component");
    int t = (m1 == detail::M2 || m1 == detail::Mask(detail::M2 | detail::M3)) ? 2 : 1;
    if (!leaves_[3]->code().is_subcode_of(leaves_[t]->code()))
      throw std::invalid_argument("combo: joined pair is not a plotkin construction");

    Blocks4 b = Blocks4::split(y);
    SoftWord left = join(b.y[a], b.y[bq], ctr);
    SoftWord right = join(b.y[c], b.y[d], ctr);
    int nb = dp_.block_len();
    SoftWord joined(2 * nb);
    for (int i = 0; i < nb; ++i) {
      joined.v[i] = left.v[i];
      joined.v[nb + i] = right.v[i];
    }
    auto entries = joined_decoder(t)->decode_list(joined, list_size, ctr);

    // Continue with the tail of the matching two-block variant.
    VariantSpec vs;
    vs.family = VariantFamily::V;
    vs.i = std::min(a, bq);
    vs.j = std::max(a, bq);
    const detail::VariantProgram prog = detail::build_program(vs);
    std::vector<DecodeOutcome> outs;
    for (const auto& e : entries) {
      std::array<std::optional<ModulatedWord>, 16> known{};
      ModulatedWord first_half(nb), second_half(nb);
      for (int i = 0; i < nb; ++i) {
        first_half.s[i] = e.word.s[i];
        second_half.s[i] = e.word.s[nb + i];
      }
      known[m1] = first_half;
      known[detail::M3] = first_half * second_half;
      // Skip the program's first two steps (both hidden words are known) and
      // run from the add-join onward.
      detail::VariantProgram tail = prog;
      tail.rest.erase(tail.rest.begin());  // drop the join-two for x3
      outs.push_back(run_continuation(tail, b, y, known, ctr, nullptr));
    }
    DecodeOutcome best = select_best(outs, ctr);
    best.ops = ctr - before;
    return best;
  }

 private:
  static void record(StepLog* log, const char* name, const OpCounter& now,
                     const OpCounter& before) {
    if (log) log->push_back({name, now - before});
  }

  std::vector<std::array<std::optional<ModulatedWord>, 16>> first_decode(
      const detail::VariantProgram& prog, const SoftWord& w, int list_size, OpCounter& ctr,
      const GenieFirstStep* genie, StepLog* log) const {
    std::vector<std::array<std::optional<ModulatedWord>, 16>> seeds;
    if (genie) {
      if (genie->mask != prog.first.out)
        throw std::invalid_argument("genie words do not match the variant's first step");
      std::array<std::optional<ModulatedWord>, 16> k{};
      k[prog.first.out] = genie->word;
      seeds.push_back(std::move(k));
      return seeds;
    }
    OpCounter before = ctr;
    auto entries = leaves_[prog.first.target]->decode_list(w, list_size, ctr);
    record(log, "first decode", ctr, before);
    for (const auto& e : entries) {
      std::array<std::optional<ModulatedWord>, 16> k{};
      k[prog.first.out] = e.word;
      seeds.push_back(std::move(k));
    }
    return seeds;
  }

  ModulatedWord known_product(const std::array<std::optional<ModulatedWord>, 16>& known,
                              const detail::ScaleRef& ref) const {
    ModulatedWord prod;
    bool first = true;
    for (detail::Mask m : ref.factors) {
      if (!known[m]) throw std::logic_error("variant engine: unknown scale word");
      prod = first ? *known[m] : prod * (*known[m]);
      first = false;
    }
    if (first) throw std::logic_error("variant engine: empty scale");
    return prod;
  }

  DecodeOutcome run_continuation(const detail::VariantProgram& prog, const Blocks4& b,
                                 const SoftWord& y,
                                 std::array<std::optional<ModulatedWord>, 16>& known,
                                 OpCounter& ctr, StepLog* log) const {
    std::optional<SoftWord> add4_sum;
    for (const auto& st : prog.rest) {
      OpCounter before = ctr;
      switch (st.kind) {
        case detail::VariantStep::Kind::Join2: {
          SoftWord w = join_scaled(b.y[st.a], b.y[st.b], known_product(known, st.b_scale), ctr);
          record(log, "join-two", ctr, before);
          before = ctr;
          known[st.out] = leaves_[st.target]->decode(w, ctr).word;
          record(log, "decode", ctr, before);
          break;
        }
        case detail::VariantStep::Kind::JoinAdd: {
          SoftWord w = join_add(b.y[st.a], b.y[st.b], b.y[st.c], b.y[st.d],
                                known_product(known, st.d_scale), ctr);
          record(log, "join-add", ctr, before);
          before = ctr;
          known[st.out] = leaves_[st.target]->decode(w, ctr).word;
          record(log, "decode", ctr, before);
          break;
        }
        case detail::VariantStep::Kind::AddJoin: {
          SoftWord w = add_join(b.y[st.a], b.y[st.b], known_product(known, st.b_scale),
                                b.y[st.c], b.y[st.d], known_product(known, st.d_scale), ctr);
          record(log, "add-join", ctr, before);
          before = ctr;
          known[st.out] = leaves_[st.target]->decode(w, ctr).word;
          record(log, "decode", ctr, before);
          break;
        }
        case detail::VariantStep::Kind::Add4: {
          detail::ScaleRef s1{{detail::M1}}, s2{{detail::M2}},
              s3{{detail::M1, detail::M2, detail::M3}};
          SoftWord y1 = scale_by_codeword(b.y[1], known_product(known, s1), ctr);
          SoftWord y2 = scale_by_codeword(b.y[2], known_product(known, s2), ctr);
          SoftWord y3 = scale_by_codeword(b.y[3], known_product(known, s3), ctr);
          std::array<SoftWord, 4> parts = {b.y[0], y1, y2, y3};
          SoftWord w = add_blocks(std::span<const SoftWord>(parts.data(), 4), ctr);
          record(log, "add-four", ctr, before);
          before = ctr;
          known[detail::M0] = leaves_[0]->decode(w, ctr).word;
          record(log, "decode", ctr, before);
          add4_sum = std::move(w);
          break;
        }
        case detail::VariantStep::Kind::Derive: {
          if (!known[st.from1] || !known[st.from2])
            throw std::logic_error("variant engine: derive from unknown words");
          known[st.out] = (*known[st.from1]) * (*known[st.from2]);
          break;
        }
      }
    }
    for (detail::Mask m : {detail::M0, detail::M1, detail::M2, detail::M3})
      if (!known[m]) throw std::logic_error("variant engine: incomplete decode");
    const ModulatedWord& x0 = *known[detail::M0];
    const ModulatedWord& x1 = *known[detail::M1];
    const ModulatedWord& x2 = *known[detail::M2];
    const ModulatedWord& x3 = *known[detail::M3];
    int nb = dp_.block_len();
    DecodeOutcome out;
    out.word = ModulatedWord(4 * nb);
    for (int i = 0; i < nb; ++i) {
      out.word.s[i] = x0.s[i];
      out.word.s[nb + i] = static_cast<int8_t>(x0.s[i] * x1.s[i]);
      out.word.s[2 * nb + i] = static_cast<int8_t>(x0.s[i] * x2.s[i]);
      out.word.s[3 * nb + i] = static_cast<int8_t>(x0.s[i] * x1.s[i] * x2.s[i] * x3.s[i]);
    }
    OpCounter before = ctr;
    if (prog.ends_with_add4 && add4_sum)
      out.correlation = correlation_via_add_four(x0, *add4_sum, ctr);
    else
      out.correlation = correlation(out.word, y, ctr);
    record(log, "correlation", ctr, before);
    return out;
  }

  DecodeOutcome select_best(const std::vector<DecodeOutcome>& all, OpCounter& ctr) const {
    int valid = 0;
    const DecodeOutcome* best = nullptr;
    for (const auto& o : all) {
      if (o.failed) continue;
      ++valid;
      if (!best || o.correlation > best->correlation) best = &o;
    }
    if (!best) {
      DecodeOutcome fail;
      fail.failed = true;
      return fail;
    }
    if (valid > 1) ctr.comparisons += valid - 1;
    return *best;
  }

  // Decoder for the joined plotkin word of combo decoding, built on demand.
  DecoderPtr joined_decoder(int t) const {
    LinearCode joined = plotkin_construction(leaves_[t]->code(), leaves_[3]->code());
    const LinearCode& ct = leaves_[t]->code();
    BinaryWord ones(ct.n());
    for (int i = 0; i < ct.n(); ++i) ones.set(i, true);
    if (leaves_[3]->code().k() == 1 && ct.contains(ones))
      return std::make_shared<SimplexPlotkinLeaf>(joined, ct);
    return std::make_shared<CorrEnumLeaf>(joined);
  }

  DoublePlotkinCode dp_;
  std::array<DecoderPtr, 4> leaves_;
};

// A nested double construction decoded by its variant set, usable as a
// component decoder of a larger construction. An optional structural list
// decoder serves the list entry; otherwise lists are drawn from the variant
// outcomes themselves.
class VariantBasedDecoder final : public ComponentDecoder {
 public:
  VariantBasedDecoder(DpDecoder engine, std::vector<VariantSpec> specs,
                      DecoderPtr structural_list = nullptr)
      : ComponentDecoder(engine.dp().composite()),
        engine_(std::move(engine)),
        specs_(std::move(specs)),
        structural_list_(std::move(structural_list)) {}

  const DpDecoder& engine() const { return engine_; }
  const std::vector<VariantSpec>& specs() const { return specs_; }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    return engine_.decode_multi(y, specs_, ctr);
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    if (list_size == 1) return {decode(y, ctr)};
    if (structural_list_) return structural_list_->decode_list(y, list_size, ctr);
    std::vector<DecodeOutcome> all;
    for (size_t s = 0; s < specs_.size(); ++s) {
      VariantSpec widened = specs_[s];
      widened.list_size = std::max(widened.list_size, list_size);
      auto outs = engine_.decode_variant(y, widened, ctr);
      for (auto& o : outs) {
        if (o.failed) continue;
        o.variant_index = static_cast<int>(s);
        all.push_back(std::move(o));
      }
    }
    std::stable_sort(all.begin(), all.end(), [](const DecodeOutcome& a, const DecodeOutcome& b) {
      return a.correlation > b.correlation;
    });
    ctr.comparisons += detail::selection_comparisons(list_size, static_cast<int>(all.size()));
    // Distinct words only.
    std::vector<DecodeOutcome> out;
    for (auto& o : all) {
      bool dup = false;
      for (const auto& kept : out)
        if (kept.word == o.word) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(o));
      if (static_cast<int>(out.size()) == list_size) break;
    }
    return out;
  }

 private:
  DpDecoder engine_;
  std::vector<VariantSpec> specs_;
  DecoderPtr structural_list_;
};

}  // namespace plotkin
