#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace plotkin;

namespace {
LinearCode simplex43() { return rm_code(1, 2); }  // the (4,3,2) even-weight code
}

TEST_CASE("plotkin combination doubles length and adds dimensions") {
  LinearCode c = plotkin_construction(simplex43(), repetition_code(4));
  REQUIRE(c.n() == 8);
  REQUIRE(c.k() == 4);
  REQUIRE(c.d_declared() == 4);
  REQUIRE(c == rm_code(1, 3));

  LinearCode c2 = plotkin_construction(parity_check_code(8), rm_code(1, 3));
  REQUIRE(c2.n() == 16);
  REQUIRE(c2.k() == 11);
  REQUIRE(c2.d_declared() == 4);
  REQUIRE(c2 == rm_code(2, 4));

  REQUIRE_THROWS_AS(plotkin_construction(parity_check_code(8), repetition_code(4)), std::invalid_argument);
}

TEST_CASE("plotkin with the zero code repeats the first component") {
  LinearCode c = plotkin_construction(simplex43(), zero_code(4));
  REQUIRE(c.k() == 3);
  REQUIRE(c.d_declared() == 4);  // twice the component distance
  c.for_each_codeword([](const BinaryWord& w) {
    REQUIRE(w.slice(0, 4) == w.slice(4, 8));
  });
}

TEST_CASE("reed-muller parameters and base cases") {
  LinearCode r25 = rm_code(2, 5);
  REQUIRE(r25.n() == 32);
  REQUIRE(r25.k() == 16);
  REQUIRE(r25.d_declared() == 8);

  LinearCode r13 = rm_code(1, 3);
  REQUIRE(r13.n() == 8);
  REQUIRE(r13.k() == 4);
  REQUIRE(r13.d_declared() == 4);

  LinearCode r04 = rm_code(0, 4);
  REQUIRE(r04.n() == 16);
  REQUIRE(r04.k() == 1);
  REQUIRE(r04.d_declared() == 16);
  REQUIRE(r04.num_codewords() == 2);

  REQUIRE_THROWS_AS(rm_code(-1, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(rm_code(4, 3), std::invalid_argument);
}

TEST_CASE("reed-muller dimensions satisfy the binomial sum and its recursion") {
  for (int m = 0; m <= 7; ++m) {
    for (int r = 0; r <= m; ++r) {
      uint64_t k = 0;
      for (int i = 0; i <= r; ++i) k += oracle::binom(m, i);
      REQUIRE(rm_dimension(r, m) == k);
      if ((1 << m) <= 128) REQUIRE(rm_code(r, m).k() == static_cast<int>(k));
    }
  }
  for (int m = 1; m <= 7; ++m)
    for (int r = 0; r < m; ++r)
      REQUIRE(rm_dimension(r + 1, m + 1) == rm_dimension(r + 1, m) + rm_dimension(r, m));
}

TEST_CASE("encoding maps information words through the generator") {
  LinearCode c = rm_code(1, 3);
  REQUIRE(c.encode(BinaryWord(4)).is_zero());
  for (int i = 0; i < c.k(); ++i) {
    BinaryWord e(c.k());
    e.set(i, true);
    REQUIRE(c.encode(e) == c.generator_rows()[i]);
  }
  REQUIRE_THROWS_AS(c.encode(BinaryWord(5)), std::invalid_argument);

  // Exhaustive enumeration: 16 distinct words, weights only 0, 4 or 8.
  auto words = oracle::enumerate(c);
  REQUIRE(words.size() == 16);
  std::set<std::vector<int>> distinct(words.begin(), words.end());
  REQUIRE(distinct.size() == 16);
  for (const auto& w : words) {
    int wt = oracle::weight(w);
    REQUIRE((wt == 0 || wt == 4 || wt == 8));
  }
  for (uint64_t u = 0; u < 16; ++u) {
    BinaryWord info(4);
    for (int i = 0; i < 4; ++i)
      if ((u >> i) & 1) info.set(i, true);
    REQUIRE(oracle::to_bits(c.encode(info)) ==
            oracle::add(oracle::Bits(8, 0), oracle::to_bits(c.codeword_at(u))));
  }
}

TEST_CASE("membership testing realizes the indicator function") {
  LinearCode c = rm_code(1, 3);
  REQUIRE(c.contains(BinaryWord(8)));
  REQUIRE(c.contains(c.generator_rows()[0] ^ c.generator_rows()[2]));
  BinaryWord w(8);
  w.set(3, true);
  REQUIRE_FALSE(c.contains(w));  // weight 1 < distance 4
  REQUIRE_THROWS_AS(c.contains(BinaryWord(9)), std::invalid_argument);
}

TEST_CASE("subcode testing checks generator rows") {
  REQUIRE(rm_code(0, 3).is_subcode_of(rm_code(1, 3)));
  REQUIRE_FALSE(rm_code(2, 4).is_subcode_of(rm_code(1, 4)));
  LinearCode c = rm_code(2, 4);
  REQUIRE(c.is_subcode_of(c));
  REQUIRE_THROWS_AS(rm_code(1, 3).is_subcode_of(rm_code(1, 4)), std::invalid_argument);
}

TEST_CASE("exhaustive minimum distance matches the naive oracle") {
  LinearCode r25 = rm_code(2, 5);
  REQUIRE(r25.verify_min_distance() == 8);
  REQUIRE(r25.distance_verified());

  LinearCode rep = repetition_code(8);
  REQUIRE(rep.verify_min_distance() == 8);

  for (LinearCode c : {rm_code(1, 4), rm_code(2, 4), parity_check_code(7), rm_code(1, 3)}) {
    REQUIRE(c.verify_min_distance() == oracle::min_distance(c));
  }

  LinearCode big = rm_code(2, 7);  // dimension 29
  REQUIRE_THROWS_AS(big.verify_min_distance(), std::invalid_argument);
}

TEST_CASE("generators are reduced: rank k, canonical equality, rows are codewords") {
  std::mt19937_64 rng(5);
  LinearCode c = rm_code(2, 4);
  // Same span presented through random row combinations reduces identically.
  std::vector<BinaryWord> rows = c.generator_rows();
  for (int t = 0; t < 30; ++t) {
    int a = rng() % rows.size(), b = rng() % rows.size();
    if (a != b) rows[a] ^= rows[b];
  }
  rows.push_back(rows[0] ^ rows[1]);  // dependent extra row
  LinearCode rebuilt = LinearCode::from_rows(c.n(), rows, c.d_declared());
  REQUIRE(rebuilt == c);
  REQUIRE(rebuilt.k() == c.k());
  for (const auto& r : rebuilt.generator_rows()) REQUIRE(c.contains(r));
  REQUIRE(c.contains(BinaryWord(c.n())));
}

TEST_CASE("sampled weight floor never beats a verified distance") {
  LinearCode c = rm_code(2, 5);
  c.verify_min_distance();
  REQUIRE(c.sampled_weight_floor(20000) >= c.d_declared());
}
