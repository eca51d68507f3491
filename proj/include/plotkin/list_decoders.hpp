#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "plotkin/variants.hpp"

namespace plotkin {

// Structural list decoder for the (32,16,8) double construction over the
// components (8,7,2), (8,4,4), (8,4,4), (8,1,8):
//   - the joined halves uncover a (16,5,8) plotkin word, list-decoded over
//     the eight half-set representatives of (8,4,4);
//   - each entry fixes the two inner components, an add-join produces a
//     four-entry list for the remaining (8,4,4);
//   - the combined sum and a parity decode finish each of the 32 candidates,
//     and the best `L` by correlation survive.
class R25StructuralList final : public ComponentDecoder {
 public:
  explicit R25StructuralList(DoublePlotkinCode dp)
      : ComponentDecoder(dp.composite()), dp_(std::move(dp)) {
    if (dp_.block_len() != 8 || dp_.component(1).k() != 4 || dp_.component(3).k() != 1)
      throw std::invalid_argument("R25StructuralList: unexpected component structure");
    simplex_outer_ = std::make_shared<SimplexPlotkinLeaf>(
        plotkin_construction(dp_.component(2), dp_.component(3)), dp_.component(2));
    simplex_inner_ = std::make_shared<SimplexPlotkinLeaf>(
        dp_.component(1), detail::left_half_code(dp_.component(1)));
    parity_ = std::make_shared<ParityLeaf>(8);
  }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    return decode_list(y, 1, ctr)[0];
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    Blocks4 b = Blocks4::split(y);
    int nb = dp_.block_len();
    // Joined halves carry |x2|x2x3|.
    SoftWord joined(2 * nb);
    {
      OpCounter tmp;
      SoftWord l = join(b.y[0], b.y[2], tmp);
      SoftWord r = join(b.y[1], b.y[3], tmp);
      ctr += tmp;
      for (int i = 0; i < nb; ++i) {
        joined.v[i] = l.v[i];
        joined.v[nb + i] = r.v[i];
      }
    }
    auto outer = simplex_outer_->decode_list(joined, 8, ctr);
    std::vector<DecodeOutcome> cands;
    for (const auto& e : outer) {
      ModulatedWord x2(nb), x2x3(nb);
      for (int i = 0; i < nb; ++i) {
        x2.s[i] = e.word.s[i];
        x2x3.s[i] = e.word.s[nb + i];
      }
      ModulatedWord x3 = x2 * x2x3;
      SoftWord w1 = add_join(b.y[0], b.y[2], x2, b.y[1], b.y[3], x2x3, ctr);
      auto inner = simplex_inner_->decode_list(w1, 4, ctr);
      for (const auto& e1 : inner) {
        const ModulatedWord& x1 = e1.word;
        SoftWord s1 = scale_by_codeword(b.y[1], x1, ctr);
        SoftWord s2 = scale_by_codeword(b.y[2], x2, ctr);
        SoftWord s3 = scale_by_codeword(b.y[3], x1 * x2 * x3, ctr);
        std::array<SoftWord, 4> parts = {b.y[0], s1, s2, s3};
        SoftWord w = add_blocks(std::span<const SoftWord>(parts.data(), 4), ctr);
        ModulatedWord x0 = parity_->decode(w, ctr).word;
        DecodeOutcome o;
        o.word = ModulatedWord(4 * nb);
        for (int i = 0; i < nb; ++i) {
          o.word.s[i] = x0.s[i];
          o.word.s[nb + i] = static_cast<int8_t>(x0.s[i] * x1.s[i]);
          o.word.s[2 * nb + i] = static_cast<int8_t>(x0.s[i] * x2.s[i]);
          o.word.s[3 * nb + i] = static_cast<int8_t>(x0.s[i] * x1.s[i] * x2.s[i] * x3.s[i]);
        }
        o.correlation = correlation_via_add_four(x0, w, ctr);
        cands.push_back(std::move(o));
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const DecodeOutcome& a, const DecodeOutcome& b) {
                       return a.correlation > b.correlation;
                     });
    ctr.comparisons += detail::selection_comparisons(list_size, static_cast<int>(cands.size()));
    if (static_cast<int>(cands.size()) > list_size) cands.resize(list_size);
    return cands;
  }

 private:
  DoublePlotkinCode dp_;
  std::shared_ptr<SimplexPlotkinLeaf> simplex_outer_;
  std::shared_ptr<SimplexPlotkinLeaf> simplex_inner_;
  std::shared_ptr<ParityLeaf> parity_;
};

// Decoder for a concatenation |A|B|...|: the segments decode independently;
// list entries combine per-segment lists best-first in shells, so the first
// four entries of a two-segment merge pair ranks (1,1),(1,2),(2,1),(2,2).
class ConcatLeaf final : public ComponentDecoder {
 public:
  ConcatLeaf(LinearCode code, std::vector<DecoderPtr> segments)
      : ComponentDecoder(std::move(code)), segments_(std::move(segments)) {
    int total = 0;
    for (const auto& s : segments_) total += s->code().n();
    if (total != code_.n()) throw std::invalid_argument("ConcatLeaf: segment lengths mismatch");
  }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    DecodeOutcome out;
    out.word = ModulatedWord(code_.n());
    out.correlation = 0.0;
    int off = 0;
    for (const auto& seg : segments_) {
      int n = seg->code().n();
      SoftWord part(n);
      for (int i = 0; i < n; ++i) part.v[i] = y.v[off + i];
      DecodeOutcome o = seg->decode(part, ctr);
      for (int i = 0; i < n; ++i) out.word.s[off + i] = o.word.s[i];
      out.correlation += o.correlation;
      off += n;
    }
    return out;
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    std::vector<std::vector<DecodeOutcome>> lists;
    int off = 0;
    for (const auto& seg : segments_) {
      int n = seg->code().n();
      SoftWord part(n);
      for (int i = 0; i < n; ++i) part.v[i] = y.v[off + i];
      lists.push_back(seg->decode_list(part, list_size, ctr));
      off += n;
    }
    std::vector<DecodeOutcome> out;
    std::vector<size_t> pick(lists.size(), 0);
    enumerate_shells(lists, pick, out, list_size);
    return out;
  }

 private:
  // Index tuples ordered by their maximum entry, lexicographic within a
  // shell; for two segments this is the zig-zag merge of the ranked lists.
  void enumerate_shells(const std::vector<std::vector<DecodeOutcome>>& lists,
                        std::vector<size_t>& pick, std::vector<DecodeOutcome>& out,
                        int list_size) const {
    size_t max_rank = 0;
    for (const auto& l : lists) max_rank = std::max(max_rank, l.size());
    for (size_t shell = 0; shell < max_rank && static_cast<int>(out.size()) < list_size;
         ++shell) {
      std::fill(pick.begin(), pick.end(), 0);
      emit_shell(lists, pick, 0, shell, false, out, list_size);
    }
  }

  void emit_shell(const std::vector<std::vector<DecodeOutcome>>& lists, std::vector<size_t>& pick,
                  size_t depth, size_t shell, bool hit_shell, std::vector<DecodeOutcome>& out,
                  int list_size) const {
    if (static_cast<int>(out.size()) >= list_size) return;
    if (depth == lists.size()) {
      if (!hit_shell) return;
      DecodeOutcome o;
      o.word = ModulatedWord(code_.n());
      o.correlation = 0.0;
      int off = 0;
      for (size_t s = 0; s < lists.size(); ++s) {
        const DecodeOutcome& e = lists[s][pick[s]];
        for (int i = 0; i < e.word.len(); ++i) o.word.s[off + i] = e.word.s[i];
        o.correlation += e.correlation;
        off += e.word.len();
      }
      out.push_back(std::move(o));
      return;
    }
    size_t limit = std::min(shell + 1, lists[depth].size());
    for (size_t r = 0; r < limit; ++r) {
      pick[depth] = r;
      emit_shell(lists, pick, depth + 1, shell, hit_shell || r == shell, out, list_size);
    }
  }

  std::vector<DecoderPtr> segments_;
};

}  // namespace plotkin
