#pragma once

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "plotkin/catalog.hpp"
#include "plotkin/decoder_spec.hpp"

namespace plotkin {

// ---------------------------------------------------------------------------
// Bound bookkeeping and small statistics helpers
// ---------------------------------------------------------------------------

// True when the decided word correlates strictly better than the transmitted
// one; an exhaustive-correlation decoder would then also decide wrongly.
// Ties count as correct for the bound, keeping it a lower bound.
inline bool ml_bound_event(const ModulatedWord& x_t, const ModulatedWord& x_hat,
                           const SoftWord& y) {
  return correlation(x_t, y) < correlation(x_hat, y);
}

struct WilsonInterval {
  double lo = 0.0, hi = 0.0;
};

inline WilsonInterval wilson_interval(uint64_t errors, uint64_t trials, double z = 1.959963984540054) {
  if (trials == 0) return {};
  double n = static_cast<double>(trials);
  double p = static_cast<double>(errors) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = p + z2 / (2.0 * n);
  double rad = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, (center - rad) / denom), std::min(1.0, (center + rad) / denom)};
}

// Probability that tau uniformly placed errors occupy distinct block
// positions, exact product form and its exponential approximation.
inline double birthday_exact(int n, int tau) {
  if (n <= 0 || tau < 0) throw std::invalid_argument("birthday_exact: bad arguments");
  if (tau > n) return 0.0;
  double p = 1.0;
  for (int i = 0; i < tau; ++i) p *= static_cast<double>(n - i) / n;
  return p;
}

inline double birthday_approx(int n, int tau) {
  if (n <= 0 || tau < 0) throw std::invalid_argument("birthday_approx: bad arguments");
  return std::exp(-static_cast<double>(tau) * (tau - 1) / (2.0 * n));
}

// ---------------------------------------------------------------------------
// Decoder resolution
// ---------------------------------------------------------------------------

struct ResolvedDecoder {
  std::string name;
  DecoderPtr plain;                             // used when no terms are present
  std::shared_ptr<const VariantBasedDecoder> engine;  // used with parsed terms
  std::vector<DecoderTerm> terms;
  std::vector<std::string> warnings;
};

inline ResolvedDecoder resolve_decoder(const Catalog& catalog, const std::string& code_label,
                                       const std::string& decoder_spec) {
  const CatalogEntry& entry = catalog.at(code_label);
  ResolvedDecoder rd;
  if (decoder_spec == "ml") {
    LinearCode code = entry.build_code();
    if (code.k() > kEnumerationBound)
      throw std::invalid_argument("ml decoder: dimension exceeds the enumeration bound");
    rd.name = "ml";
    rd.plain = std::make_shared<MlTableDecoder>(std::move(code));
    return rd;
  }
  if (!entry.build_decoder)
    throw std::invalid_argument("code " + code_label + " has no decoder wired");
  std::string spec = decoder_spec;
  if (spec.empty() || spec == "builtin") spec = entry.default_decoder;
  if (spec.empty()) {
    rd.name = "builtin";
    rd.plain = entry.build_decoder();
    return rd;
  }
  DecoderPtr built = entry.build_decoder();
  auto engine = std::dynamic_pointer_cast<const VariantBasedDecoder>(built);
  if (!engine)
    throw std::invalid_argument("code " + code_label +
                                " is not decoded by a variant engine; use --decoder builtin");
  ParsedDecoderSpec parsed = parse_decoder_spec(spec);
  rd.engine = engine;
  rd.terms = parsed.terms;
  rd.warnings = parsed.warnings;
  std::string name;
  for (const auto& t : rd.terms) {
    if (!name.empty()) name += ";";
    name += t.to_string();
  }
  rd.name = name;
  for (const auto& t : rd.terms)
    if (t.kind == DecoderTerm::Kind::Variant) rd.engine->engine().validate_spec(t.variant);
  return rd;
}

inline DecodeOutcome decode_once(const ResolvedDecoder& rd, const SoftWord& y, OpCounter& ctr) {
  if (!rd.engine) return rd.plain->decode(y, ctr);
  const DpDecoder& dp = rd.engine->engine();
  OpCounter before = ctr;
  std::vector<DecodeOutcome> all;
  for (size_t t = 0; t < rd.terms.size(); ++t) {
    const DecoderTerm& term = rd.terms[t];
    switch (term.kind) {
      case DecoderTerm::Kind::Variant: {
        auto outs = dp.decode_variant(y, term.variant, ctr);
        for (auto& o : outs) {
          o.variant_index = static_cast<int>(t);
          all.push_back(std::move(o));
        }
        break;
      }
      case DecoderTerm::Kind::DpList: {
        auto outs = dp.dp_list_decode(y, term.list_size, ctr);
        for (auto& o : outs) {
          o.variant_index = static_cast<int>(t);
          all.push_back(std::move(o));
        }
        break;
      }
      case DecoderTerm::Kind::Combo: {
        DecodeOutcome o = dp.combo_decode(y, term.p1, term.p2, ctr);
        o.variant_index = static_cast<int>(t);
        all.push_back(std::move(o));
        break;
      }
    }
  }
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
    fail.ops = ctr - before;
    return fail;
  }
  if (valid > 1) ctr.comparisons += valid - 1;
  DecodeOutcome out = *best;
  out.ops = ctr - before;
  return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo word-error simulation
// ---------------------------------------------------------------------------

struct SimConfig {
  std::string code;
  std::string decoder;  // decoder spec string, "ml", "builtin", or empty for the default
  double ebn0_start = 2.0, ebn0_stop = 2.0, ebn0_step = 1.0;
  uint64_t max_trials = 100000;
  uint64_t min_word_errors = 200;
  uint64_t seed = 1;
  int workers = 1;
  std::string out_path;
};

struct SimRow {
  std::string code, decoder;
  double ebn0_db = 0.0;
  uint64_t trials = 0, word_errors = 0, bit_errors = 0, ml_bound_errors = 0;
  double wer = 0.0, wer_lo = 0.0, wer_hi = 0.0, ber = 0.0, mean_ac_ops = 0.0;
  uint64_t seed = 0;
};

namespace detail {

struct TrialResult {
  uint8_t word_error = 0;
  uint8_t mlb = 0;
  uint32_t bit_errors = 0;
  uint64_t ac_ops = 0;
};

struct TrialContext {
  const LinearCode* code;
  const ResolvedDecoder* decoder;
  double sigma;
  uint64_t seed;
  uint64_t point;
  // Optional genie for first-step-known runs.
  const DoublePlotkinCode* dp = nullptr;
  std::optional<VariantSpec> genie_variant;
  Mask genie_mask = 0;
};

inline BinaryWord random_info(int k, TrialRng& rng) {
  BinaryWord info(k);
  uint64_t bits = 0;
  for (int i = 0; i < k; ++i) {
    if (i % 64 == 0) bits = rng.bits();
    if ((bits >> (i % 64)) & 1) info.set(i, true);
  }
  return info;
}

inline TrialResult score_trial(const LinearCode& code, const BinaryWord& c, const ModulatedWord& x,
                               const SoftWord& y, const DecodeOutcome& out, const OpCounter& ctr) {
  TrialResult r;
  r.ac_ops = ctr.ac_ops();
  bool err = out.failed || !(out.word == x);
  r.word_error = err ? 1 : 0;
  if (err) {
    if (out.failed) {
      r.bit_errors = static_cast<uint32_t>(code.k());
    } else {
      BinaryWord info_t = code.info_from_codeword(c);
      BinaryWord decoded_info = code.info_from_codeword(demodulate(out.word));
      r.bit_errors = static_cast<uint32_t>(hamming_distance(info_t, decoded_info));
      r.mlb = ml_bound_event(x, out.word, y) ? 1 : 0;
    }
  }
  return r;
}

inline TrialResult run_trial(const TrialContext& cx, uint64_t trial) {
  TrialRng rng(cx.seed, cx.point, trial);
  const LinearCode& code = *cx.code;
  OpCounter ctr;
  DecodeOutcome out;
  BinaryWord c;
  if (cx.genie_variant) {
    // Encode through the component layout so the transmitted hidden words
    // are available to the genie.
    const DoublePlotkinCode& dp = *cx.dp;
    BinaryWord info = random_info(dp.k(), rng);
    c = dp.encode(info);
    std::array<BinaryWord, 4> u = dp.encode_components(info);
    BinaryWord prod(dp.block_len());
    for (int i = 1; i <= 3; ++i)
      if (cx.genie_mask & (1 << i)) prod ^= u[i];
    ModulatedWord x = modulate(c);
    SoftWord y = awgn(x, cx.sigma, rng);
    GenieFirstStep genie{cx.genie_mask, modulate(prod)};
    const auto& vb = dynamic_cast<const VariantBasedDecoder&>(*cx.decoder->plain);
    out = vb.engine().decode_genie(y, *cx.genie_variant, genie, ctr);
    return score_trial(code, c, x, y, out, ctr);
  }
  BinaryWord info = random_info(code.k(), rng);
  c = code.encode(info);
  ModulatedWord x = modulate(c);
  SoftWord y = awgn(x, cx.sigma, rng);
  out = decode_once(*cx.decoder, y, ctr);
  return score_trial(code, c, x, y, out, ctr);
}

inline void accumulate_point(const TrialContext& cx, uint64_t max_trials, uint64_t min_errors,
                             int workers, SimRow& row) {
  constexpr uint64_t kBatch = 256;
  std::vector<TrialResult> batch(kBatch);
  uint64_t done = 0;
  while (done < max_trials && (min_errors == 0 || row.word_errors < min_errors)) {
    uint64_t count = std::min(kBatch, max_trials - done);
    if (workers <= 1) {
      for (uint64_t i = 0; i < count; ++i) batch[i] = run_trial(cx, done + i);
    } else {
      std::atomic<uint64_t> next{0};
      auto work = [&] {
        for (uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
          batch[i] = run_trial(cx, done + i);
      };
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (uint64_t i = 0; i < count; ++i) {
      row.word_errors += batch[i].word_error;
      row.bit_errors += batch[i].bit_errors;
      row.ml_bound_errors += batch[i].mlb;
      row.mean_ac_ops += static_cast<double>(batch[i].ac_ops);
    }
    done += count;
  }
  row.trials = done;
  if (done > 0) {
    row.wer = static_cast<double>(row.word_errors) / done;
    WilsonInterval wi = wilson_interval(row.word_errors, done);
    row.wer_lo = wi.lo;
    row.wer_hi = wi.hi;
    row.ber = static_cast<double>(row.bit_errors) / (static_cast<double>(done) * cx.code->k());
    row.mean_ac_ops /= static_cast<double>(done);
  }
}

}  // namespace detail

inline std::vector<double> ebn0_points(const SimConfig& cfg) {
  if (cfg.ebn0_step <= 0) throw std::invalid_argument("ebn0 sweep: step must be positive");
  std::vector<double> pts;
  for (double e = cfg.ebn0_start; e <= cfg.ebn0_stop + 1e-9; e += cfg.ebn0_step)
    pts.push_back(e);
  return pts;
}

inline std::vector<SimRow> run_wer(const SimConfig& cfg, const Catalog& catalog) {
  const CatalogEntry& entry = catalog.at(cfg.code);
  ResolvedDecoder rd = resolve_decoder(catalog, cfg.code, cfg.decoder);
  LinearCode code = entry.build_code();
  double rate = static_cast<double>(code.k()) / code.n();
  std::vector<SimRow> rows;
  auto points = ebn0_points(cfg);
  for (size_t p = 0; p < points.size(); ++p) {
    if (cfg.max_trials == 0) continue;
    SimRow row;
    row.code = entry.label;
    row.decoder = rd.name;
    row.ebn0_db = points[p];
    row.seed = cfg.seed;
    detail::TrialContext cx;
    cx.code = &code;
    cx.decoder = &rd;
    cx.sigma = sigma_from_config(points[p], rate);
    cx.seed = cfg.seed;
    cx.point = p;
    detail::accumulate_point(cx, cfg.max_trials, cfg.min_word_errors, cfg.workers, row);
    rows.push_back(std::move(row));
  }
  return rows;
}

// First decoding step replaced by the transmitted hidden code word; the
// remaining steps run normally. Valid for v and v4 variants.
inline std::vector<SimRow> run_l_bound(const SimConfig& cfg, const Catalog& catalog) {
  const CatalogEntry& entry = catalog.at(cfg.code);
  if (!entry.build_dp) throw std::invalid_argument("lbound: code is not a double construction");
  auto specs = parse_variant_specs(cfg.decoder.empty() ? "v(0,1)" : cfg.decoder);
  if (specs.size() != 1 || specs[0].family == VariantFamily::V0)
    throw std::invalid_argument("lbound: give exactly one v(i,j) or v4(i,j) variant");
  ResolvedDecoder rd;
  rd.name = "lbound:" + specs[0].to_string();
  DecoderPtr built = entry.build_decoder();
  auto engine = std::dynamic_pointer_cast<const VariantBasedDecoder>(built);
  if (!engine) throw std::invalid_argument("lbound: code has no variant engine");
  rd.plain = engine;

  DoublePlotkinCode dp = *entry.build_dp();
  LinearCode code = entry.build_code();
  double rate = static_cast<double>(code.k()) / code.n();
  detail::Mask mask = detail::build_program(specs[0]).first.out;

  std::vector<SimRow> rows;
  auto points = ebn0_points(cfg);
  for (size_t p = 0; p < points.size(); ++p) {
    if (cfg.max_trials == 0) continue;
    SimRow row;
    row.code = entry.label;
    row.decoder = rd.name;
    row.ebn0_db = points[p];
    row.seed = cfg.seed;
    detail::TrialContext cx;
    cx.code = &code;
    cx.decoder = &rd;
    cx.sigma = sigma_from_config(points[p], rate);
    cx.seed = cfg.seed;
    cx.point = p;
    cx.dp = &dp;
    cx.genie_variant = specs[0];
    cx.genie_mask = mask;
    detail::accumulate_point(cx, cfg.max_trials, cfg.min_word_errors, cfg.workers, row);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Error-cancellation statistics
// ---------------------------------------------------------------------------

// Sign-error rates of the block combinations at a given operating point, with
// all scrambling words known. The transmitted symbols are +1 without loss of
// generality, so a combination is in error when its value is negative.
struct CancellationStats {
  double eb_n0_db = 0.0, rate = 0.5, sigma = 0.0;
  uint64_t samples = 0;
  double channel = 0.0, join_two = 0.0, join_four = 0.0, join_add = 0.0, add_join = 0.0,
         add_two = 0.0, add_four = 0.0;
  double channel_analytic = 0.0;    // Q(1/sigma)
  double join_four_analytic = 0.0;  // 4p(1-p)^3 + 4p^3(1-p)
};

inline CancellationStats run_cancellation_stats(double eb_n0_db, double rate, uint64_t samples,
                                                uint64_t seed = 1) {
  CancellationStats st;
  st.eb_n0_db = eb_n0_db;
  st.rate = rate;
  st.sigma = sigma_from_config(eb_n0_db, rate);
  st.samples = samples;
  double p = q_function(1.0 / st.sigma);
  st.channel_analytic = p;
  st.join_four_analytic = 4 * p * (1 - p) * (1 - p) * (1 - p) + 4 * p * p * p * (1 - p);
  TrialRng rng(seed, 0xCA11, 0);
  uint64_t c = 0, j2 = 0, j4 = 0, ja = 0, aj = 0, a2 = 0, a4 = 0;
  auto jn = [](double a, double b) { return sgn(a * b) * std::min(std::fabs(a), std::fabs(b)); };
  for (uint64_t s = 0; s < samples; ++s) {
    double y0 = 1.0 + rng.gaussian(st.sigma);
    double y1 = 1.0 + rng.gaussian(st.sigma);
    double y2 = 1.0 + rng.gaussian(st.sigma);
    double y3 = 1.0 + rng.gaussian(st.sigma);
    c += y0 < 0;
    j2 += jn(y0, y1) < 0;
    j4 += jn(jn(y0, y1), jn(y2, y3)) < 0;
    ja += (jn(y0, y1) + jn(y2, y3)) < 0;
    aj += jn(y0 + y2, y1 + y3) < 0;
    a2 += (y0 + y1) < 0;
    a4 += (y0 + y1 + y2 + y3) < 0;
  }
  double n = static_cast<double>(samples);
  st.channel = c / n;
  st.join_two = j2 / n;
  st.join_four = j4 / n;
  st.join_add = ja / n;
  st.add_join = aj / n;
  st.add_two = a2 / n;
  st.add_four = a4 / n;
  return st;
}

// ---------------------------------------------------------------------------
// Operation-count report
// ---------------------------------------------------------------------------

struct OpCountStep {
  std::string name;
  OpCounter ops;
};

struct OpCountReport {
  std::string code, decoder;
  std::vector<OpCountStep> steps;
  OpCounter total;
};

inline OpCountReport report_opcounts(const Catalog& catalog, const std::string& code_label,
                                     const std::string& decoder_spec, uint64_t seed = 1) {
  const CatalogEntry& entry = catalog.at(code_label);
  ResolvedDecoder rd = resolve_decoder(catalog, code_label, decoder_spec);
  LinearCode code = entry.build_code();
  TrialRng rng(seed, 0x09C0, 0);
  BinaryWord info = detail::random_info(code.k(), rng);
  ModulatedWord x = modulate(code.encode(info));
  double sigma = sigma_from_config(2.0, static_cast<double>(code.k()) / code.n());
  SoftWord y = awgn(x, sigma, rng);

  OpCountReport rep;
  rep.code = entry.label;
  rep.decoder = rd.name;
  OpCounter ctr;
  if (!rd.engine) {
    DecodeOutcome out = rd.plain->decode(y, ctr);
    (void)out;
    rep.steps.push_back({"decode", ctr});
  } else {
    const DpDecoder& dp = rd.engine->engine();
    int outcomes = 0;
    for (const auto& term : rd.terms) {
      OpCounter before = ctr;
      if (term.kind == DecoderTerm::Kind::Variant) {
        StepLog log;
        auto outs = dp.decode_variant(y, term.variant, ctr, nullptr, &log);
        for (const auto& o : outs) outcomes += o.failed ? 0 : 1;
        for (const auto& s : log) rep.steps.push_back({term.to_string() + ": " + s.name, s.delta});
      } else if (term.kind == DecoderTerm::Kind::DpList) {
        outcomes += static_cast<int>(dp.dp_list_decode(y, term.list_size, ctr).size());
        rep.steps.push_back({term.to_string(), ctr - before});
      } else {
        DecodeOutcome o = dp.combo_decode(y, term.p1, term.p2, ctr);
        outcomes += o.failed ? 0 : 1;
        rep.steps.push_back({term.to_string(), ctr - before});
      }
    }
    if (outcomes > 1) {
      ctr.comparisons += outcomes - 1;
      OpCounter sel;
      sel.comparisons = static_cast<uint64_t>(outcomes - 1);
      rep.steps.push_back({"select best", sel});
    }
  }
  rep.total = ctr;
  return rep;
}

// ---------------------------------------------------------------------------
// CSV output
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

inline std::string csv_header() {
  return "code,decoder,ebn0_db,trials,word_errors,wer,wer_lo,wer_hi,bit_errors,ber,"
         "ml_bound_errors,mean_ac_ops,seed";
}

inline std::string csv_row(const SimRow& r) {
  std::string s;
  s += r.code + "," + r.decoder + ",";
  s += format_double(r.ebn0_db) + ",";
  s += std::to_string(r.trials) + "," + std::to_string(r.word_errors) + ",";
  s += format_double(r.wer) + "," + format_double(r.wer_lo) + "," + format_double(r.wer_hi) + ",";
  s += std::to_string(r.bit_errors) + "," + format_double(r.ber) + ",";
  s += std::to_string(r.ml_bound_errors) + "," + format_double(r.mean_ac_ops) + ",";
  s += std::to_string(r.seed);
  return s;
}

inline std::string csv_table(const std::vector<SimRow>& rows) {
  std::string s = csv_header() + "\n";
  for (const auto& r : rows) s += csv_row(r) + "\n";
  return s;
}

inline void write_csv(const std::vector<SimRow>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << csv_table(rows);
}

}  // namespace plotkin
