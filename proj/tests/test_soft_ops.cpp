#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace plotkin;

namespace {

SoftWord random_soft(int n, TrialRng& rng) {
  SoftWord y(n);
  for (int i = 0; i < n; ++i) y.v[i] = rng.gaussian(1.0) + (rng.bits() & 1 ? 1 : -1);
  return y;
}

}  // namespace

TEST_CASE("join keeps the weaker magnitude and the product sign") {
  SoftWord a(1), b(1);
  a.v = {0.5};
  b.v = {-0.2};
  OpCounter ctr;
  REQUIRE(join(a, b, ctr).v[0] == -0.2);
  REQUIRE(ctr.signs == 1);
  REQUIRE(ctr.comparisons == 1);
  REQUIRE(ctr.additions == 0);

  TrialRng rng(1, 0, 0);
  SoftWord r = random_soft(16, rng);
  SoftWord rr = join(r, r, ctr);
  for (int i = 0; i < 16; ++i) REQUIRE(rr.v[i] == std::fabs(r.v[i]));

  SoftWord c = random_soft(16, rng), d = random_soft(16, rng);
  SoftWord left = join(join(r, c, ctr), d, ctr);
  SoftWord right = join(r, join(c, d, ctr), ctr);
  for (int i = 0; i < 16; ++i) {
    REQUIRE(left.v[i] == right.v[i]);
    REQUIRE(join(r, c, ctr).v[i] == join(c, r, ctr).v[i]);
  }
  SoftWord bad(8);
  REQUIRE_THROWS_AS(join(r, bad, ctr), std::invalid_argument);
}

TEST_CASE("joining all four blocks of a clean word uncovers the innermost component") {
  DoublePlotkinCode dp = rm_double_plotkin(2, 5);
  TrialRng rng(2, 0, 0);
  BinaryWord info(16);
  for (int i = 0; i < 16; ++i) info.set(i, rng.bits() & 1);
  SoftWord y(32);
  ModulatedWord x = modulate(dp.encode(info));
  for (int i = 0; i < 32; ++i) y.v[i] = x.s[i];
  Blocks4 b = Blocks4::split(y);
  OpCounter ctr;
  SoftWord w = join_many(std::span<const SoftWord>(b.y.data(), 4), ctr);
  ModulatedWord x3 = modulate(dp.encode_components(info)[3]);
  for (int i = 0; i < 8; ++i) REQUIRE(w.v[i] == double(x3.s[i]));
  REQUIRE(ctr.signs == 24);
  REQUIRE(ctr.comparisons == 24);

  OpCounter c2;
  SoftWord two = join_many(std::span<const SoftWord>(b.y.data(), 2), c2);
  OpCounter c3;
  SoftWord ref = join(b.y[0], b.y[1], c3);
  for (int i = 0; i < 8; ++i) REQUIRE(two.v[i] == ref.v[i]);
}

TEST_CASE("scaling by a known word is an involution and preserves the noise law") {
  TrialRng rng(3, 0, 0);
  SoftWord y = random_soft(32, rng);
  ModulatedWord ones(32, 1);
  OpCounter ctr;
  REQUIRE(scale_by_codeword(y, ones, ctr).v == y.v);
  BinaryWord xb(32);
  for (int i = 0; i < 32; ++i) xb.set(i, rng.bits() & 1);
  ModulatedWord x1 = modulate(xb);
  SoftWord twice = scale_by_codeword(scale_by_codeword(y, x1, ctr), x1, ctr);
  REQUIRE(twice.v == y.v);
  REQUIRE(ctr.signs == 3 * 32);

  // Kolmogorov-Smirnov: descrambled noisy samples against directly drawn ones.
  const int N = 100000;
  std::vector<double> s1(N), s2(N);
  ModulatedWord plus(1, 1);
  TrialRng ra(5, 0, 0), rb(5, 1, 0);
  for (int i = 0; i < N; ++i) {
    int8_t xi = (ra.bits() & 1) ? 1 : -1;
    ModulatedWord xw(1, xi);
    SoftWord r = awgn(xw, 0.7943, ra);
    s1[i] = r.v[0] * xi;  // descramble
    s2[i] = awgn(plus, 0.7943, rb).v[0];
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  double dmax = 0.0;
  size_t i = 0, j = 0;
  while (i < s1.size() && j < s2.size()) {
    if (s1[i] <= s2[j])
      ++i;
    else
      ++j;
    dmax = std::max(dmax, std::fabs(double(i) / N - double(j) / N));
  }
  // 0.1% critical value ~ 1.95 * sqrt(2/N)
  REQUIRE(dmax < 1.95 * std::sqrt(2.0 / N));
}

TEST_CASE("block sums add elementwise at one addition per pair") {
  SoftWord a(4), b(4);
  a.v = {1, 1, 1, 1};
  b.v = {1, 1, 1, 1};
  OpCounter ctr;
  std::array<SoftWord, 2> two = {a, b};
  SoftWord s = add_blocks(std::span<const SoftWord>(two.data(), 2), ctr);
  for (double v : s.v) REQUIRE(v == 2.0);
  REQUIRE(ctr.additions == 4);
  REQUIRE(ctr.signs == 0);
}

TEST_CASE("counter deltas match the published table for all block lengths") {
  TrialRng rng(7, 0, 0);
  for (int n : {2, 4, 8, 16, 32}) {
    SoftWord a = random_soft(n, rng), b = random_soft(n, rng), c = random_soft(n, rng),
             d = random_soft(n, rng);
    ModulatedWord x(n, 1);
    uint64_t un = n;

    OpCounter jt;
    join(a, b, jt);
    REQUIRE(jt == OpCounter{un, un, 0});

    OpCounter j4;
    std::array<SoftWord, 4> blocks = {a, b, c, d};
    join_many(std::span<const SoftWord>(blocks.data(), 4), j4);
    REQUIRE(j4 == OpCounter{3 * un, 3 * un, 0});

    OpCounter a2;  // scaling plus one pairwise sum
    SoftWord scaled = scale_by_codeword(c, x, a2);
    std::array<SoftWord, 2> pair = {a, scaled};
    add_blocks(std::span<const SoftWord>(pair.data(), 2), a2);
    REQUIRE(a2 == OpCounter{un, 0, un});

    OpCounter a4;
    SoftWord s1 = scale_by_codeword(b, x, a4), s2 = scale_by_codeword(c, x, a4),
             s3 = scale_by_codeword(d, x, a4);
    std::array<SoftWord, 4> all = {a, s1, s2, s3};
    add_blocks(std::span<const SoftWord>(all.data(), 4), a4);
    REQUIRE(a4 == OpCounter{3 * un, 0, 3 * un});

    OpCounter ja;
    join_add(a, b, c, d, x, ja);
    REQUIRE(ja == OpCounter{2 * un, 2 * un, un});

    OpCounter aj;
    add_join(a, c, x, b, d, x, aj);
    REQUIRE(aj == OpCounter{un, un, 2 * un});
  }
}

TEST_CASE("join-add and add-join combine clean blocks into doubled confidence") {
  DoublePlotkinCode dp = rm_double_plotkin(2, 5);
  BinaryWord info(16);
  info.set(3, true);
  info.set(8, true);
  auto u = dp.encode_components(info);
  SoftWord y(32);
  ModulatedWord x = modulate(dp.encode(info));
  for (int i = 0; i < 32; ++i) y.v[i] = x.s[i];
  Blocks4 b = Blocks4::split(y);
  ModulatedWord x1 = modulate(u[1]), x2 = modulate(u[2]), x3 = modulate(u[3]);

  OpCounter ja;
  SoftWord w = join_add(b, x3, ja);
  for (int i = 0; i < 8; ++i) REQUIRE(w.v[i] == 2.0 * x1.s[i]);
  REQUIRE(ja == OpCounter{16, 16, 8});

  OpCounter aj;
  SoftWord w2 = add_join(b, x2, x3, aj);
  for (int i = 0; i < 8; ++i) REQUIRE(w2.v[i] == 2.0 * x1.s[i]);
  REQUIRE(aj == OpCounter{8, 8, 16});
}

TEST_CASE("sign-error rates of the combinations at the half-rate 2 dB point") {
  // One million positions per block, all scrambling words known.
  const int N = 1000000;
  double sigma = sigma_from_config(2.0, 0.5);
  TrialRng rng(31, 0, 0);
  ModulatedWord x(N, 1);
  std::array<SoftWord, 4> y;
  for (auto& blk : y) blk = awgn(x, sigma, rng);
  OpCounter ctr;
  auto rate_neg = [N](const SoftWord& w) {
    int neg = 0;
    for (double v : w.v) neg += v < 0;
    return double(neg) / N;
  };
  std::array<SoftWord, 4> blocks = {y[0], y[1], y[2], y[3]};
  std::span<const SoftWord> bs(blocks.data(), 4);

  REQUIRE_THAT(rate_neg(y[0]), Catch::Matchers::WithinAbs(0.1041, 0.005));
  REQUIRE_THAT(rate_neg(join(y[0], y[1], ctr)), Catch::Matchers::WithinAbs(0.1872, 0.005));
  double j4 = rate_neg(join_many(bs, ctr));
  REQUIRE_THAT(j4, Catch::Matchers::WithinAbs(0.3036, 0.005));
  double p = q_function(1.0 / sigma);
  double analytic = 4 * p * (1 - p) * (1 - p) * (1 - p) + 4 * p * p * p * (1 - p);
  REQUIRE_THAT(j4, Catch::Matchers::WithinAbs(analytic, 0.005));
  REQUIRE_THAT(analytic, Catch::Matchers::WithinAbs(0.3034, 0.0005));

  REQUIRE_THAT(rate_neg(join_add(y[0], y[1], y[2], y[3], x, ctr)),
               Catch::Matchers::WithinAbs(0.1006, 0.005));
  REQUIRE_THAT(rate_neg(add_join(y[0], y[2], x, y[1], y[3], x, ctr)),
               Catch::Matchers::WithinAbs(0.0725, 0.004));
  SoftWord sc = scale_by_codeword(y[1], x, ctr);
  std::array<SoftWord, 2> two = {y[0], sc};
  REQUIRE_THAT(rate_neg(add_blocks(std::span<const SoftWord>(two.data(), 2), ctr)),
               Catch::Matchers::WithinAbs(0.039, 0.004));
  std::array<SoftWord, 4> four = {y[0], y[1], y[2], y[3]};
  REQUIRE_THAT(rate_neg(add_blocks(std::span<const SoftWord>(four.data(), 4), ctr)),
               Catch::Matchers::WithinAbs(0.0056, 0.0015));
}

TEST_CASE("correlation sums signed values and is antisymmetric") {
  ModulatedWord x(4, 1);
  SoftWord y(4);
  y.v = {1, -1, 1, 1};
  OpCounter ctr;
  REQUIRE(correlation(x, y, ctr) == 2.0);
  REQUIRE(ctr.additions == 3);
  REQUIRE(ctr.signs == 4);

  TrialRng rng(9, 0, 0);
  SoftWord r = random_soft(16, rng);
  BinaryWord cb(16);
  for (int i = 0; i < 16; ++i) cb.set(i, rng.bits() & 1);
  ModulatedWord xc = modulate(cb);
  REQUIRE(correlation(xc, r) == -correlation(-xc, r));

  SoftWord clean(16);
  for (int i = 0; i < 16; ++i) clean.v[i] = xc.s[i];
  REQUIRE(correlation(xc, clean) == 16.0);
}

TEST_CASE("the combined-sum correlation equals the full-length correlation") {
  DoublePlotkinCode dp = rm_double_plotkin(2, 5);
  TrialRng rng(10, 0, 0);
  for (int t = 0; t < 50; ++t) {
    BinaryWord info(16);
    for (int i = 0; i < 16; ++i) info.set(i, rng.bits() & 1);
    auto u = dp.encode_components(info);
    ModulatedWord x = modulate(dp.encode(info));
    SoftWord y = awgn(x, 0.8, rng);
    Blocks4 b = Blocks4::split(y);
    ModulatedWord x0 = modulate(u[0]), x1 = modulate(u[1]), x2 = modulate(u[2]),
                  x3 = modulate(u[3]);
    OpCounter ctr;
    SoftWord s1 = scale_by_codeword(b.y[1], x1, ctr);
    SoftWord s2 = scale_by_codeword(b.y[2], x2, ctr);
    SoftWord s3 = scale_by_codeword(b.y[3], x1 * x2 * x3, ctr);
    std::array<SoftWord, 4> parts = {b.y[0], s1, s2, s3};
    SoftWord w = add_blocks(std::span<const SoftWord>(parts.data(), 4), ctr);
    OpCounter cc;
    double via = correlation_via_add_four(x0, w, cc);
    REQUIRE(cc.additions == 7);
    REQUIRE(cc.signs == 8);
    REQUIRE_THAT(via, Catch::Matchers::WithinAbs(correlation(x, y), 1e-7));
    if (t == 0) {
      SoftWord clean(32);
      for (int i = 0; i < 32; ++i) clean.v[i] = x.s[i];
      Blocks4 cb = Blocks4::split(clean);
      OpCounter c2;
      SoftWord q1 = scale_by_codeword(cb.y[1], x1, c2);
      SoftWord q2 = scale_by_codeword(cb.y[2], x2, c2);
      SoftWord q3 = scale_by_codeword(cb.y[3], x1 * x2 * x3, c2);
      std::array<SoftWord, 4> cparts = {cb.y[0], q1, q2, q3};
      SoftWord cw = add_blocks(std::span<const SoftWord>(cparts.data(), 4), c2);
      REQUIRE(correlation_via_add_four(x0, cw, c2) == 32.0);
    }
  }
}

TEST_CASE("error counts of the joined blocks drop by twice the collision count") {
  // Exhaustive: 4 positions, every subset of the four blocks in error per
  // position.
  const int n = 4;
  for (uint32_t pattern = 0; pattern < (1u << 16); ++pattern) {
    std::array<SoftWord, 4> y;
    for (int blk = 0; blk < 4; ++blk) {
      y[blk] = SoftWord(n);
      for (int pos = 0; pos < n; ++pos) {
        bool err = (pattern >> (4 * pos + blk)) & 1;
        y[blk].v[pos] = err ? -1.0 : 1.0;
      }
    }
    OpCounter ctr;
    SoftWord w = join_many(std::span<const SoftWord>(y.data(), 4), ctr);
    int total = 0, out_errors = 0, collisions = 0;
    for (int pos = 0; pos < n; ++pos) {
      int errs = 0;
      for (int blk = 0; blk < 4; ++blk) errs += (pattern >> (4 * pos + blk)) & 1;
      total += errs;
      collisions += errs / 2;
      if (w.v[pos] < 0) ++out_errors;
    }
    REQUIRE(out_errors <= total);
    REQUIRE(out_errors == total - 2 * collisions);
  }
}

TEST_CASE("distinct-position probabilities: exact enumeration and approximation") {
  // Exhaustive over all placements of tau labeled errors into n positions.
  for (int tau = 0; tau <= 4; ++tau) {
    const int n = 8;
    uint64_t total = 1, distinct = 0;
    for (int i = 0; i < tau; ++i) total *= n;
    for (uint64_t a = 0; a < total; ++a) {
      uint64_t v = a;
      std::array<int, 4> pos{};
      bool ok = true;
      for (int i = 0; i < tau; ++i) {
        pos[i] = v % n;
        v /= n;
        for (int j = 0; j < i; ++j) ok = ok && pos[j] != pos[i];
      }
      distinct += ok;
    }
    REQUIRE(birthday_exact(n, tau) == Catch::Approx(double(distinct) / total).epsilon(1e-12));
  }
  // The exponential form drifts to ~8% relative error by tau = 8; on the
  // probability scale it stays within five points.
  for (int tau = 0; tau <= 8; ++tau) {
    double ex = birthday_exact(32, tau);
    double ap = birthday_approx(32, tau);
    REQUIRE(std::fabs(ex - ap) <= 0.05);
  }
}
