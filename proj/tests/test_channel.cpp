#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace plotkin;

TEST_CASE("modulation maps bit 0 to +1 and distributes over addition") {
  REQUIRE(modulate(BinaryWord::from_string("0000")).s == std::vector<int8_t>{1, 1, 1, 1});
  REQUIRE(modulate(BinaryWord::from_string("1010")).s == std::vector<int8_t>{-1, 1, -1, 1});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    BinaryWord a(24), b(24);
    for (int i = 0; i < 24; ++i) {
      a.set(i, rng() & 1);
      b.set(i, rng() & 1);
    }
    REQUIRE(modulate(a ^ b) == modulate(a) * modulate(b));
    REQUIRE(demodulate(modulate(a)) == a);
  }
}

TEST_CASE("noise level follows from the information-bit operating point") {
  double sigma = sigma_from_config(2.0, 0.5);
  REQUIRE_THAT(sigma, Catch::Matchers::WithinAbs(0.7943, 1e-4));
  REQUIRE_THAT(q_function(1.0 / sigma), Catch::Matchers::WithinAbs(0.1041, 2e-4));
  REQUIRE(sigma_from_config(3.7, 1.0) ==
          Catch::Approx(std::sqrt(1.0 / (2.0 * std::pow(10.0, 0.37)))));
  double s0 = sigma_from_config(0.0, 0.5);
  REQUIRE_THAT(s0 * s0, Catch::Matchers::WithinAbs(1.0, 1e-4));
  REQUIRE_THROWS_AS(sigma_from_config(2.0, 0.0), std::invalid_argument);
  // Monotone in both arguments.
  REQUIRE(sigma_from_config(3.0, 0.5) < sigma_from_config(2.0, 0.5));
  REQUIRE(sigma_from_config(2.0, 0.8) < sigma_from_config(2.0, 0.5));
}

TEST_CASE("the additive channel is centered with the configured variance") {
  ModulatedWord x(1, 1);
  TrialRng rng(99, 0, 0);
  const int N = 1000000;
  double sigma = 0.7943282347;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < N; ++i) {
    double z = awgn(x, sigma, rng).v[0] - 1.0;
    sum += z;
    sum2 += z * z;
  }
  double mean = sum / N;
  double var = sum2 / N - mean * mean;
  REQUIRE_THAT(mean, Catch::Matchers::WithinAbs(0.0, 0.004));  // 3 sigma / sqrt(N)
  REQUIRE_THAT(var, Catch::Matchers::WithinAbs(0.631, 0.003));

  TrialRng rng2(99, 1, 0);
  ModulatedWord big(64, -1);
  SoftWord clean = awgn(big, 0.0, rng2);
  for (double v : clean.v) REQUIRE(v == -1.0);
}

TEST_CASE("hard decisions map nonnegative values to zero") {
  SoftWord y(2);
  y.v = {0.3, -0.1};
  REQUIRE(hard_decision(y).to_string() == "01");
  SoftWord z(1);
  z.v = {0.0};
  REQUIRE(hard_decision(z).to_string() == "0");

  // Flip rate of the hard-decision channel at the half-rate 2 dB point.
  TrialRng rng(4, 0, 0);
  double sigma = sigma_from_config(2.0, 0.5);
  const int N = 1000000;
  ModulatedWord x(1, 1);
  int flips = 0;
  for (int i = 0; i < N; ++i)
    if (awgn(x, sigma, rng).v[0] < 0) ++flips;
  REQUIRE_THAT(flips / double(N), Catch::Matchers::WithinAbs(0.1041, 0.002));
}

TEST_CASE("binary symmetric channel flips independently with probability p") {
  TrialRng rng(12, 0, 0);
  BinaryWord c(16);
  REQUIRE(bsc(c, 0.0, rng) == c);
  BinaryWord ones = bsc(c, 1.0, rng);
  REQUIRE(ones.weight() == 16);
  uint64_t flipped = 0;
  const int N = 62500;  // 16 bits each
  for (int i = 0; i < N; ++i) flipped += bsc(c, 0.1, rng).weight();
  REQUIRE_THAT(flipped / double(N * 16), Catch::Matchers::WithinAbs(0.1, 0.001));
  REQUIRE_THROWS_AS(bsc(c, 1.5, rng), std::invalid_argument);
}

TEST_CASE("trial streams are reproducible and independent of other streams") {
  TrialRng a(1234, 7, 3), b(1234, 7, 3), c(1234, 8, 3);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    double ga = a.gaussian(1.0), gb = b.gaussian(1.0), gc = c.gaussian(1.0);
    all_equal = all_equal && ga == gb;
    any_diff = any_diff || ga != gc;
  }
  REQUIRE(all_equal);
  REQUIRE(any_diff);
}
