#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace plotkin;

TEST_CASE("the field tables come from a primitive polynomial") {
  GaloisField gf = GaloisField::gf16();
  REQUIRE(gf.order() == 15);
  REQUIRE(gf.alpha_pow(15) == 1);
  for (int i = 1; i < 15; ++i) REQUIRE(gf.alpha_pow(i) != 1);
  for (uint16_t x = 1; x < 16; ++x) REQUIRE(gf.alpha_pow(gf.log(x)) == x);
  REQUIRE_THROWS_AS(GaloisField(4, 0b11111), std::invalid_argument);  // x^4+x^3+x^2+x+1 not primitive
}

TEST_CASE("minimal polynomials and generator degrees") {
  GaloisField gf = GaloisField::gf16();
  REQUIRE(minimal_polynomial(gf, 1) == 0b10011);  // the defining polynomial
  BitPoly g5 = bch_generator(gf, 5);
  REQUIRE(poly_degree(g5) == 8);
  LinearCode c5 = bch_code(4, 5);
  REQUIRE(c5.n() == 15);
  REQUIRE(c5.k() == 7);
  REQUIRE(oracle::min_distance(c5) == 5);

  LinearCode c2 = bch_code(4, 2);
  LinearCode c3 = bch_code(4, 3);
  REQUIRE(c2.k() == 11);
  REQUIRE(c3.k() == 11);
  REQUIRE(c2 == c3);  // conjugate roots collapse the two designed distances
  REQUIRE(oracle::min_distance(c3) == 3);

  LinearCode c1 = bch_code(4, 1);
  REQUIRE(c1.k() == 15);
  REQUIRE(c1.d_declared() == 1);

  REQUIRE_THROWS_AS(bch_generator(gf, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(bch_generator(gf, 16), std::invalid_argument);
}

TEST_CASE("extended codes reach the listed parameters with verified distance") {
  LinearCode e6 = extended_bch(4, 5);
  REQUIRE(e6.n() == 16);
  REQUIRE(e6.k() == 7);
  REQUIRE(e6.d_declared() == 6);
  REQUIRE(e6.distance_verified());
  REQUIRE(oracle::min_distance(e6) == 6);

  LinearCode e8 = extended_bch(4, 7);
  REQUIRE(e8.n() == 16);
  REQUIRE(e8.k() == 5);
  REQUIRE(e8.d_declared() == 8);

  LinearCode e4 = extended_bch(4, 3);
  REQUIRE(e4.n() == 16);
  REQUIRE(e4.k() == 11);
  REQUIRE(e4.d_declared() == 4);
}

TEST_CASE("the extended family nests and has even weights throughout") {
  LinearCode e8 = extended_bch(4, 7), e6 = extended_bch(4, 5), e4 = extended_bch(4, 3);
  REQUIRE(e8.is_subcode_of(e6));
  REQUIRE(e6.is_subcode_of(e4));
  for (const auto& c : {e8, e6, e4})
    c.for_each_codeword([](const BinaryWord& w) { REQUIRE(w.weight() % 2 == 0); });
}
