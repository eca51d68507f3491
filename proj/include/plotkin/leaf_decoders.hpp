#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "plotkin/double_plotkin.hpp"
#include "plotkin/soft_ops.hpp"

namespace plotkin {

struct DecodeOutcome {
  ModulatedWord word;
  double correlation = 0.0;
  OpCounter ops;
  int variant_index = -1;
  bool failed = false;
};

namespace detail {

// Modulated representatives of the half-set C-: one word from each
// {c, c + all-one} pair, enumerated in information-index order.
inline std::vector<ModulatedWord> half_set_candidates(const LinearCode& code) {
  BinaryWord ones(code.n());
  for (int i = 0; i < code.n(); ++i) ones.set(i, true);
  auto v = code.solve_info(ones);
  if (!v) throw std::invalid_argument("half_set_candidates: all-one word not in code");
  if (code.k() > kEnumerationBound)
    throw std::invalid_argument("half_set_candidates: enumeration bound exceeded");
  uint64_t vbits = 0;
  for (int i = 0; i < code.k(); ++i)
    if (v->get(i)) vbits |= uint64_t(1) << i;
  std::vector<ModulatedWord> out;
  for (uint64_t u = 0; u < code.num_codewords(); ++u)
    if (u < (u ^ vbits)) out.push_back(modulate(code.codeword_at(u)));
  return out;
}

inline std::vector<ModulatedWord> all_candidates(const LinearCode& code) {
  if (code.k() > kEnumerationBound)
    throw std::invalid_argument("all_candidates: enumeration bound exceeded");
  std::vector<ModulatedWord> out;
  for (uint64_t u = 0; u < code.num_codewords(); ++u)
    out.push_back(modulate(code.codeword_at(u)));
  return out;
}

// Partial selection sort: cost of ordering the best `L` of `c` candidates.
inline uint64_t selection_comparisons(int L, int c) {
  uint64_t comps = 0;
  int steps = std::min(L, c - 1);
  for (int i = 1; i <= steps; ++i) comps += static_cast<uint64_t>(c - i);
  return comps;
}

struct SimplexScore {
  double phi0 = 0.0, phi1 = 0.0;
  double score = 0.0;
};

// |phi(x, y_left)| + |phi(x, y_right)| for every half-set representative.
// Charges cands*(2h-1) additions and cands*2h signs, h = half length.
inline std::vector<SimplexScore> simplex_scores(const std::vector<ModulatedWord>& cands,
                                                const SoftWord& y, OpCounter& ctr) {
  int h = y.len() / 2;
  std::vector<SimplexScore> scores(cands.size());
  for (size_t c = 0; c < cands.size(); ++c) {
    double p0 = 0.0, p1 = 0.0;
    for (int i = 0; i < h; ++i) p0 += cands[c].s[i] * y.v[i];
    for (int i = 0; i < h; ++i) p1 += cands[c].s[i] * y.v[h + i];
    scores[c] = {p0, p1, std::fabs(p0) + std::fabs(p1)};
  }
  ctr.additions += cands.size() * (2 * static_cast<uint64_t>(h) - 1);
  ctr.signs += cands.size() * 2 * static_cast<uint64_t>(h);
  return scores;
}

// Sign resolution: the candidate (or its inverse) for the left half, repeated
// or inverted on the right depending on sign agreement of the correlations.
inline DecodeOutcome resolve_simplex(const ModulatedWord& cand, const SimplexScore& sc) {
  int h = cand.len();
  DecodeOutcome out;
  out.word = ModulatedWord(2 * h);
  double s0 = sgn(sc.phi0);
  double s1 = sgn(sc.phi1);
  for (int i = 0; i < h; ++i) {
    out.word.s[i] = static_cast<int8_t>(cand.s[i] * s0);
    out.word.s[h + i] = static_cast<int8_t>(cand.s[i] * s1);
  }
  out.correlation = sc.score;
  return out;
}

inline std::vector<size_t> order_by_score_desc(const std::vector<double>& score) {
  std::vector<size_t> idx(score.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return score[a] > score[b]; });
  return idx;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Standalone decoders
// ---------------------------------------------------------------------------

// Repetition code: sign of the summed received values.
inline DecodeOutcome repetition_ml(const SoftWord& y, OpCounter& ctr) {
  double phi = 0.0;
  for (double v : y.v) phi += v;
  ctr.additions += y.len() > 0 ? y.len() - 1 : 0;
  ctr.signs += 1;
  DecodeOutcome out;
  out.word = ModulatedWord(y.len(), static_cast<int8_t>(sgn(phi)));
  out.correlation = std::fabs(phi);
  return out;
}

// Parity-check code: hard decision, then flip the least reliable position if
// the weight is odd.
inline DecodeOutcome parity_ml(const SoftWord& y, OpCounter& ctr) {
  int n = y.len();
  DecodeOutcome out;
  out.word = ModulatedWord(n);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    out.word.s[i] = static_cast<int8_t>(sgn(y.v[i]));
    if (out.word.s[i] < 0) parity ^= 1;
  }
  ctr.signs += n;
  int weakest = 0;
  for (int i = 1; i < n; ++i)
    if (std::fabs(y.v[i]) < std::fabs(y.v[weakest])) weakest = i;
  ctr.comparisons += n > 0 ? n - 1 : 0;
  if (parity) out.word.s[weakest] = static_cast<int8_t>(-out.word.s[weakest]);
  out.correlation = correlation(out.word, y, ctr);
  return out;
}

// Correlation decoding over an enumerable code. When the all-one word is a
// codeword, |phi| is maximized over the half-set and the sign of the best
// correlation picks between the word and its inverse; ties keep the lowest
// enumeration index.
inline DecodeOutcome correlation_ml(const LinearCode& code, const SoftWord& y, OpCounter& ctr) {
  if (y.len() != code.n()) throw std::invalid_argument("correlation_ml: length mismatch");
  BinaryWord ones(code.n());
  for (int i = 0; i < code.n(); ++i) ones.set(i, true);
  bool half = code.contains(ones) && code.k() >= 1;
  auto cands = half ? detail::half_set_candidates(code) : detail::all_candidates(code);
  int n = code.n();
  size_t best = 0;
  double best_score = 0.0, best_phi = 0.0;
  for (size_t c = 0; c < cands.size(); ++c) {
    double phi = 0.0;
    for (int i = 0; i < n; ++i) phi += cands[c].s[i] * y.v[i];
    double score = half ? std::fabs(phi) : phi;
    if (c == 0 || score > best_score) {
      best = c;
      best_score = score;
      best_phi = phi;
    }
  }
  ctr.additions += cands.size() * static_cast<uint64_t>(n - 1);
  ctr.signs += cands.size() * static_cast<uint64_t>(n);
  ctr.comparisons += cands.size() - 1;
  DecodeOutcome out;
  out.word = (half && best_phi < 0) ? -cands[best] : cands[best];
  out.correlation = best_score;
  return out;
}

// List variant: the L codewords with largest correlation, best first.
inline std::vector<DecodeOutcome> correlation_list(const LinearCode& code, const SoftWord& y,
                                                   int list_size, OpCounter& ctr) {
  if (list_size < 1) throw std::invalid_argument("correlation_list: list size must be >= 1");
  if (y.len() != code.n()) throw std::invalid_argument("correlation_list: length mismatch");
  BinaryWord ones(code.n());
  for (int i = 0; i < code.n(); ++i) ones.set(i, true);
  bool half = code.contains(ones) && code.k() >= 1;
  auto cands = half ? detail::half_set_candidates(code) : detail::all_candidates(code);
  int n = code.n();
  std::vector<double> phi(cands.size());
  for (size_t c = 0; c < cands.size(); ++c) {
    double p = 0.0;
    for (int i = 0; i < n; ++i) p += cands[c].s[i] * y.v[i];
    phi[c] = p;
  }
  ctr.additions += cands.size() * static_cast<uint64_t>(n - 1);
  ctr.signs += cands.size() * static_cast<uint64_t>(n);
  std::vector<double> score(cands.size());
  for (size_t c = 0; c < cands.size(); ++c) score[c] = half ? std::fabs(phi[c]) : phi[c];
  auto order = detail::order_by_score_desc(score);
  ctr.comparisons += detail::selection_comparisons(list_size, static_cast<int>(cands.size()));
  std::vector<DecodeOutcome> out;
  for (size_t r = 0; r < order.size() && static_cast<int>(out.size()) < list_size; ++r) {
    size_t c = order[r];
    DecodeOutcome o;
    o.word = (half && phi[c] < 0) ? -cands[c] : cands[c];
    o.correlation = score[c];
    out.push_back(std::move(o));
  }
  if (half) {
    // Inverted representatives extend the list beyond the half-set, worst
    // correlations last; they come at no extra real-valued cost.
    for (size_t r = order.size(); r-- > 0 && static_cast<int>(out.size()) < list_size;) {
      size_t c = order[r];
      DecodeOutcome o;
      o.word = (phi[c] < 0) ? cands[c] : -cands[c];
      o.correlation = -score[c];
      out.push_back(std::move(o));
    }
  }
  return out;
}

// ML decoding of |u0|u0+u1| with a repetition second component: maximize
// |phi(x, y0)| + |phi(x, y1)| over the half-set of c0_half and resolve both
// signs from the achieved correlations.
inline DecodeOutcome simplex_ml_plotkin(const SoftWord& y, const LinearCode& c0_half,
                                        OpCounter& ctr) {
  if (y.len() != 2 * c0_half.n()) throw std::invalid_argument("simplex_ml_plotkin: length mismatch");
  auto cands = detail::half_set_candidates(c0_half);
  auto scores = detail::simplex_scores(cands, y, ctr);
  size_t best = 0;
  for (size_t c = 1; c < scores.size(); ++c)
    if (scores[c].score > scores[best].score) best = c;
  ctr.comparisons += scores.size();
  return detail::resolve_simplex(cands[best], scores[best]);
}

namespace detail {

// Left-half restriction of a code whose words all have the form |a|a| or
// |a|a+1...1|; this is the c0 of its own plotkin view.
inline LinearCode left_half_code(const LinearCode& c0) {
  int nb = c0.n();
  if (nb % 2 != 0) throw std::invalid_argument("left_half_code: odd length");
  BinaryWord ones(nb / 2);
  for (int i = 0; i < nb / 2; ++i) ones.set(i, true);
  std::vector<BinaryWord> rows;
  for (const auto& r : c0.generator_rows()) {
    BinaryWord left = r.slice(0, nb / 2);
    BinaryWord right = r.slice(nb / 2, nb);
    if (!(right == left || right == (left ^ ones)))
      throw std::invalid_argument("left_half_code: code lacks the required structure");
    rows.push_back(left);
  }
  return LinearCode::from_rows(nb / 2, std::move(rows), c0.d_declared() / 2);
}

// One decision per sign pattern of w = y0 +- y1 +- y2 +- y3, each scored by
// the correlation of the inner decision against w.
inline std::vector<DecodeOutcome> simplex_double_cases(const SoftWord& y, const LinearCode& c0,
                                                       OpCounter& ctr) {
  int nb = c0.n();
  if (y.len() != 4 * nb) throw std::invalid_argument("simplex_ml_double: length mismatch");
  Blocks4 b = Blocks4::split(y);
  static constexpr int kSigns[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  bool inner_full = c0.k() == c0.n();
  LinearCode half;
  if (!inner_full) half = left_half_code(c0);
  std::vector<DecodeOutcome> cases;
  for (int cs = 0; cs < 4; ++cs) {
    int s1 = kSigns[cs][0], s2 = kSigns[cs][1];
    SoftWord w(nb);
    for (int i = 0; i < nb; ++i)
      w.v[i] = b.y[0].v[i] + s1 * b.y[1].v[i] + s2 * b.y[2].v[i] + s1 * s2 * b.y[3].v[i];
    ctr.additions += 3 * static_cast<uint64_t>(nb);
    ctr.signs += 3 * static_cast<uint64_t>(nb);
    ModulatedWord x0(nb);
    if (inner_full) {
      for (int i = 0; i < nb; ++i) x0.s[i] = static_cast<int8_t>(sgn(w.v[i]));
      ctr.signs += nb;
    } else {
      x0 = simplex_ml_plotkin(w, half, ctr).word;
    }
    DecodeOutcome out;
    out.correlation = correlation_via_add_four(x0, w, ctr);
    out.word = ModulatedWord(4 * nb);
    for (int i = 0; i < nb; ++i) {
      out.word.s[i] = x0.s[i];
      out.word.s[nb + i] = static_cast<int8_t>(s1 * x0.s[i]);
      out.word.s[2 * nb + i] = static_cast<int8_t>(s2 * x0.s[i]);
      out.word.s[3 * nb + i] = static_cast<int8_t>(s1 * s2 * x0.s[i]);
    }
    cases.push_back(std::move(out));
  }
  return cases;
}

}  // namespace detail

// ML decoding of the length-4n view |x0|x0x1|x0x2|x0x1x2| with repetition
// middle components: try all four sign patterns of the combined sum
// w = y0 +- y1 +- y2 +- y3, decode c0 on each, keep the best correlation.
inline DecodeOutcome simplex_ml_double(const SoftWord& y, const LinearCode& c0, OpCounter& ctr) {
  auto cases = detail::simplex_double_cases(y, c0, ctr);
  size_t best = 0;
  for (size_t c = 1; c < cases.size(); ++c)
    if (cases[c].correlation > cases[best].correlation) best = c;
  ctr.comparisons += cases.size();
  return cases[best];
}

// ---------------------------------------------------------------------------
// Component decoder interface used by the variant engine
// ---------------------------------------------------------------------------

// A decoder for one component code. decode() is the single-decision entry,
// decode_list() the list entry whose first element is the best decision.
// Costing follows the published per-decoder itemization: picking the maximum
// of c candidate scores takes c-1 comparisons, ordering the best L of c
// candidates takes sum_{i=1..min(L,c-1)} (c-i) comparisons.
class ComponentDecoder {
 public:
  explicit ComponentDecoder(LinearCode code) : code_(std::move(code)) {}
  virtual ~ComponentDecoder() = default;

  const LinearCode& code() const { return code_; }

  virtual DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const = 0;

  virtual std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                                 OpCounter& ctr) const {
    (void)list_size;
    return {decode(y, ctr)};
  }

 protected:
  LinearCode code_;
};

using DecoderPtr = std::shared_ptr<const ComponentDecoder>;

class RepetitionLeaf final : public ComponentDecoder {
 public:
  explicit RepetitionLeaf(int n) : ComponentDecoder(repetition_code(n)) {}

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    return repetition_ml(y, ctr);
  }

  // The list entry orders the two codewords, which takes one comparison.
  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    DecodeOutcome best = repetition_ml(y, ctr);
    ctr.comparisons += 1;
    std::vector<DecodeOutcome> out{best};
    if (list_size >= 2) {
      DecodeOutcome inv;
      inv.word = -best.word;
      inv.correlation = -best.correlation;
      out.push_back(std::move(inv));
    }
    return out;
  }
};

class ParityLeaf final : public ComponentDecoder {
 public:
  explicit ParityLeaf(int n) : ComponentDecoder(parity_check_code(n)) {}

  // Hard decisions plus the search for the least reliable position; the
  // correlation is not produced here, final decisions are scored later.
  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    int n = y.len();
    DecodeOutcome out;
    out.word = ModulatedWord(n);
    int parity = 0;
    for (int i = 0; i < n; ++i) {
      out.word.s[i] = static_cast<int8_t>(sgn(y.v[i]));
      if (out.word.s[i] < 0) parity ^= 1;
    }
    ctr.signs += n;
    int weakest = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(y.v[i]) < std::fabs(y.v[weakest])) weakest = i;
    ctr.comparisons += n - 1;
    if (parity) out.word.s[weakest] = static_cast<int8_t>(-out.word.s[weakest]);
    return out;
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    int n = y.len();
    ModulatedWord hard(n);
    int parity = 0;
    for (int i = 0; i < n; ++i) {
      hard.s[i] = static_cast<int8_t>(sgn(y.v[i]));
      if (hard.s[i] < 0) parity ^= 1;
    }
    ctr.signs += n;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return std::fabs(y.v[a]) < std::fabs(y.v[b]);
    });
    ctr.comparisons += detail::selection_comparisons(list_size, n);
    std::vector<DecodeOutcome> out;
    int L = std::min<int>(list_size, n);
    if (parity) {
      // Odd weight: flip one of the least reliable positions.
      for (int r = 0; r < L; ++r) {
        DecodeOutcome o;
        o.word = hard;
        o.word.s[idx[r]] = static_cast<int8_t>(-o.word.s[idx[r]]);
        out.push_back(std::move(o));
      }
    } else {
      out.push_back({.word = hard});
      for (int r = 1; r < L; ++r) {
        DecodeOutcome o;
        o.word = hard;
        o.word.s[idx[0]] = static_cast<int8_t>(-o.word.s[idx[0]]);
        o.word.s[idx[r]] = static_cast<int8_t>(-o.word.s[idx[r]]);
        out.push_back(std::move(o));
      }
    }
    return out;
  }
};

class FullSpaceLeaf final : public ComponentDecoder {
 public:
  explicit FullSpaceLeaf(int n) : ComponentDecoder(full_space_code(n)) {}

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    int n = y.len();
    DecodeOutcome out;
    out.word = ModulatedWord(n);
    for (int i = 0; i < n; ++i) out.word.s[i] = static_cast<int8_t>(sgn(y.v[i]));
    ctr.signs += n;
    return out;
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    DecodeOutcome best = decode(y, ctr);
    std::vector<DecodeOutcome> out{best};
    if (list_size > 1) {
      int n = y.len();
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::fabs(y.v[a]) < std::fabs(y.v[b]);
      });
      ctr.comparisons += detail::selection_comparisons(list_size - 1, n);
      for (int r = 0; r + 1 < list_size && r < n; ++r) {
        DecodeOutcome o;
        o.word = best.word;
        o.word.s[idx[r]] = static_cast<int8_t>(-o.word.s[idx[r]]);
        out.push_back(std::move(o));
      }
    }
    return out;
  }
};

// Correlation-table decoder over an enumerable code.
class CorrEnumLeaf final : public ComponentDecoder {
 public:
  explicit CorrEnumLeaf(LinearCode code) : ComponentDecoder(std::move(code)) {
    BinaryWord ones(code_.n());
    for (int i = 0; i < code_.n(); ++i) ones.set(i, true);
    half_ = code_.contains(ones) && code_.k() >= 1;
    cands_ = half_ ? detail::half_set_candidates(code_) : detail::all_candidates(code_);
  }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    int n = code_.n();
    size_t best = 0;
    double best_score = 0.0, best_phi = 0.0;
    for (size_t c = 0; c < cands_.size(); ++c) {
      double phi = 0.0;
      for (int i = 0; i < n; ++i) phi += cands_[c].s[i] * y.v[i];
      double score = half_ ? std::fabs(phi) : phi;
      if (c == 0 || score > best_score) {
        best = c;
        best_score = score;
        best_phi = phi;
      }
    }
    ctr.additions += cands_.size() * static_cast<uint64_t>(n - 1);
    ctr.signs += cands_.size() * static_cast<uint64_t>(n);
    ctr.comparisons += cands_.size() - 1;
    DecodeOutcome out;
    out.word = (half_ && best_phi < 0) ? -cands_[best] : cands_[best];
    out.correlation = best_score;
    return out;
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    int n = code_.n();
    std::vector<double> phi(cands_.size()), score(cands_.size());
    for (size_t c = 0; c < cands_.size(); ++c) {
      double p = 0.0;
      for (int i = 0; i < n; ++i) p += cands_[c].s[i] * y.v[i];
      phi[c] = p;
      score[c] = half_ ? std::fabs(p) : p;
    }
    ctr.additions += cands_.size() * static_cast<uint64_t>(n - 1);
    ctr.signs += cands_.size() * static_cast<uint64_t>(n);
    auto order = detail::order_by_score_desc(score);
    ctr.comparisons += detail::selection_comparisons(list_size, static_cast<int>(cands_.size()));
    std::vector<DecodeOutcome> out;
    for (size_t r = 0; r < order.size() && static_cast<int>(out.size()) < list_size; ++r) {
      size_t c = order[r];
      DecodeOutcome o;
      o.word = (half_ && phi[c] < 0) ? -cands_[c] : cands_[c];
      o.correlation = score[c];
      out.push_back(std::move(o));
    }
    return out;
  }

 private:
  bool half_ = false;
  std::vector<ModulatedWord> cands_;
};

// Plotkin-view decoder for |u0|u0+u1| with repetition second component, used
// as the engine realization for first-order codes. One decision costs
// K*(2h-1) additions plus K-1 comparisons over the K half-set scores.
class SimplexPlotkinLeaf final : public ComponentDecoder {
 public:
  SimplexPlotkinLeaf(LinearCode code, LinearCode c0_half)
      : ComponentDecoder(std::move(code)), half_code_(std::move(c0_half)) {
    if (code_.n() != 2 * half_code_.n())
      throw std::invalid_argument("SimplexPlotkinLeaf: length mismatch");
    cands_ = detail::half_set_candidates(half_code_);
  }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    auto scores = detail::simplex_scores(cands_, y, ctr);
    size_t best = 0;
    for (size_t c = 1; c < scores.size(); ++c)
      if (scores[c].score > scores[best].score) best = c;
    ctr.comparisons += scores.size() - 1;
    return detail::resolve_simplex(cands_[best], scores[best]);
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    auto scores = detail::simplex_scores(cands_, y, ctr);
    std::vector<double> s(scores.size());
    for (size_t c = 0; c < scores.size(); ++c) s[c] = scores[c].score;
    auto order = detail::order_by_score_desc(s);
    ctr.comparisons += detail::selection_comparisons(list_size, static_cast<int>(scores.size()));
    std::vector<DecodeOutcome> out;
    for (size_t r = 0; r < order.size() && static_cast<int>(out.size()) < list_size; ++r)
      out.push_back(detail::resolve_simplex(cands_[order[r]], scores[order[r]]));
    return out;
  }

 private:
  LinearCode half_code_;
  std::vector<ModulatedWord> cands_;
};

// Four-sign-pattern decoder for the length-4n first-order view; wraps the
// standalone routine, whose published cost it inherits.
class SimplexDoubleLeaf final : public ComponentDecoder {
 public:
  SimplexDoubleLeaf(LinearCode code, LinearCode inner_c0)
      : ComponentDecoder(std::move(code)), inner_(std::move(inner_c0)) {
    if (code_.n() != 4 * inner_.n())
      throw std::invalid_argument("SimplexDoubleLeaf: length mismatch");
  }

  DecodeOutcome decode(const SoftWord& y, OpCounter& ctr) const override {
    return simplex_ml_double(y, inner_, ctr);
  }

  std::vector<DecodeOutcome> decode_list(const SoftWord& y, int list_size,
                                         OpCounter& ctr) const override {
    auto cases = detail::simplex_double_cases(y, inner_, ctr);
    std::vector<double> s(cases.size());
    for (size_t c = 0; c < cases.size(); ++c) s[c] = cases[c].correlation;
    auto order = detail::order_by_score_desc(s);
    ctr.comparisons += 1 + detail::selection_comparisons(list_size, static_cast<int>(cases.size()));
    std::vector<DecodeOutcome> out;
    for (size_t r = 0; r < order.size() && static_cast<int>(out.size()) < list_size; ++r)
      out.push_back(cases[order[r]]);
    return out;
  }

 private:
  LinearCode inner_;
};

}  // namespace plotkin
