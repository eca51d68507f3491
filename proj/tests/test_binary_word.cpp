#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace plotkin;

TEST_CASE("binary words store bits with explicit length") {
  BinaryWord w(70);
  REQUIRE(w.len() == 70);
  REQUIRE(w.weight() == 0);
  REQUIRE(w.is_zero());
  w.set(0, true);
  w.set(69, true);
  REQUIRE(w.weight() == 2);
  REQUIRE(w.get(69));
  w.flip(69);
  REQUIRE(w.weight() == 1);
  REQUIRE(w.to_string().substr(0, 2) == "10");
}

TEST_CASE("addition requires equal lengths") {
  BinaryWord a(8), b(9);
  REQUIRE_THROWS_AS(a ^ b, std::invalid_argument);
}

TEST_CASE("weight stays within 0..len and matches the plain count") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 130);
    BinaryWord a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a.set(i, rng() & 1);
      b.set(i, rng() & 1);
    }
    BinaryWord s = a ^ b;
    REQUIRE(s.weight() >= 0);
    REQUIRE(s.weight() <= n);
    auto oa = oracle::to_bits(a), ob = oracle::to_bits(b);
    REQUIRE(oracle::weight(oracle::add(oa, ob)) == s.weight());
    REQUIRE(hamming_distance(a, b) == s.weight());
  }
}

TEST_CASE("string round trips, slices and concatenation") {
  BinaryWord w = BinaryWord::from_string("0110100");
  REQUIRE(w.len() == 7);
  REQUIRE(w.weight() == 3);
  REQUIRE(w.to_string() == "0110100");
  REQUIRE(w.slice(1, 4).to_string() == "110");
  BinaryWord parts[2] = {w.slice(0, 3), w.slice(3, 7)};
  REQUIRE(BinaryWord::concat(parts) == w);
  REQUIRE_THROWS_AS(BinaryWord::from_string("01x"), std::invalid_argument);
}
