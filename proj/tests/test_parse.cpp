#include "doctest.h"
#include "helpers.hpp"
#include "negaring/parse.hpp"

using namespace negaring;

TEST_CASE("poly grammar") {
  PrimeField F(5);
  CHECK(parse_poly("1+2x+x^3", F) == FpPoly(F, {1, 2, 0, 1}));
  CHECK(parse_poly("(x+1)^4", F) == FpPoly(F, {1, 4, 1, 4, 1}));
  CHECK(parse_poly("0", F).is_zero());
  CHECK(parse_poly("-x", F) == FpPoly(F, {0, 4}));
  CHECK(parse_poly("x - x", F).is_zero());
  CHECK(parse_poly("3*x^2", F) == parse_poly("3x^2", F));
  CHECK(parse_poly("2(x+1)", F) == FpPoly(F, {2, 2}));
  CHECK(parse_poly("7", F) == FpPoly(F, {2})); // reduced mod p, not an error
  CHECK(parse_poly("(x+1)(x+2)", F) == FpPoly(F, {2, 3, 1}));
  CHECK(parse_poly("((x+1)^2)^2", F) == parse_poly("(x+1)^4", F));

  CHECK(throws_kind(errc::parse_error, [&] { parse_poly("", F); }));
  CHECK(throws_kind(errc::parse_error, [&] { parse_poly("x+", F); }));
  CHECK(throws_kind(errc::parse_error, [&] { parse_poly("y", F); }));
  CHECK(throws_kind(errc::parse_error, [&] { parse_poly("(x+1", F); }));
  CHECK(throws_kind(errc::parse_error, [&] { parse_poly("x^", F); }));
  CHECK(throws_kind(errc::parse_error, [&] { parse_poly("x^-2", F); }));
}

TEST_CASE("rpoly grammar fills missing parts with zero") {
  PrimeField F(5);
  Modulus mod(Sign::Negacyclic, 5);
  RPoly f = parse_rpoly("(x+1)^4;0;0;0", F, mod);
  CHECK(f.comp(0) == parse_poly("(x+1)^4", F));
  CHECK(f.comp(1).is_zero());

  RPoly g = parse_rpoly("1+2x+x^3", F, mod);
  CHECK(g.comp(0) == FpPoly(F, {1, 2, 0, 1}));
  CHECK(g.comp(3).is_zero());

  RPoly h = parse_rpoly("0;0;0;(x+1)^3", F, mod);
  CHECK(h.comp(3) == parse_poly("(x+1)^3", F));
  CHECK(parse_rpoly(";;;1", F, mod).comp(3) == parse_poly("1", F));

  // reduction happens on entry: x^5 = -1 in the negacyclic ring
  CHECK(parse_rpoly("x^5;0;0;0", F, mod) == parse_rpoly("4;0;0;0", F, mod));
  CHECK(parse_rpoly("x^5", F, Modulus(Sign::Cyclic, 5)) ==
        parse_rpoly("1", F, Modulus(Sign::Cyclic, 5)));

  CHECK(throws_kind(errc::parse_error, [&] { parse_rpoly("1;1;1;1;1", F, mod); }));
  CHECK(throws_kind(errc::odd_length_required, [] { Modulus(Sign::Negacyclic, 4); }));
}

TEST_CASE("serialization round trips") {
  PrimeField F(7);
  Modulus mod(Sign::Negacyclic, 9);
  for (const char* s : {"0;0;0;0", "1;0;0;0", "0;1;0;0", "1+6x^8;2x;0;5",
                        "x^2+3x+1;0;4x^4;6+x"}) {
    RPoly f = parse_rpoly(s, F, mod);
    CHECK(parse_rpoly(to_string(f), F, mod) == f);
  }
  CHECK(to_string(parse_poly("x^2+0x+3", F)) == "3+x^2");
  CHECK(to_string(FpPoly(F)) == "0");
  CHECK(to_string(parse_rpoly("0", F, mod)) == "0;0;0;0");
}
