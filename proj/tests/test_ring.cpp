#include "doctest.h"
#include "helpers.hpp"
#include "negaring/parse.hpp"
#include "negaring/ring.hpp"
#include "negaring/sampling.hpp"
#include "negaring/verify.hpp"

using namespace negaring;

TEST_CASE("coefficient ring products") {
  PrimeField F(5);
  RElem u{0, 1, 0, 0}, v{0, 0, 1, 0}, uv{0, 0, 0, 1};
  CHECK(r_mul(F, u, u).is_zero());
  CHECK(r_mul(F, v, v).is_zero());
  CHECK(r_mul(F, u, v) == uv);
  CHECK(r_mul(F, v, u) == uv);
  CHECK(r_mul(F, u, uv).is_zero());
  CHECK(r_mul(F, RElem{1, 1, 0, 0}, RElem{1, 4, 0, 0}) == RElem{1, 0, 0, 0});
  CHECK(r_mul(F, RElem{2, 1, 3, 0}, RElem{3, 0, 1, 4}) == RElem{1, 3, 1, 4});
}

TEST_CASE("coefficient ring axioms on random triples") {
  for (int64_t p : {3, 5, 7}) {
    PrimeField F(p);
    Rng rng(99 + static_cast<uint64_t>(p));
    auto draw = [&] { return RElem{rng.fp(F), rng.fp(F), rng.fp(F), rng.fp(F)}; };
    for (int i = 0; i < 4000; ++i) {
      RElem a = draw(), b = draw(), c = draw();
      CHECK(r_mul(F, a, b) == r_mul(F, b, a));
      CHECK(r_mul(F, r_mul(F, a, b), c) == r_mul(F, a, r_mul(F, b, c)));
      CHECK(r_mul(F, a, r_add(F, b, c)) == r_add(F, r_mul(F, a, b), r_mul(F, a, c)));
      CHECK(r_add(F, a, r_sub(F, b, a)) == b);
      CHECK(r_is_unit(r_mul(F, a, b)) == (r_is_unit(a) && r_is_unit(b)));
    }
  }
}

TEST_CASE("ideal classification") {
  PrimeField F(5);
  CHECK(r_classify(F, RElem{}) == IdealClass{IdealTag::Zero});
  CHECK(r_classify(F, RElem{2, 0, 1, 0}) == IdealClass{IdealTag::Unit});
  CHECK(r_classify(F, RElem{0, 3, 0, 1}) == IdealClass{IdealTag::U});
  CHECK(r_classify(F, RElem{0, 0, 2, 2}) == IdealClass{IdealTag::V});
  CHECK(r_classify(F, RElem{0, 0, 0, 4}) == IdealClass{IdealTag::UV});
  CHECK(r_classify(F, RElem{0, 2, 1, 0}) == IdealClass{IdealTag::UPlusAlphaV, 3});

  CHECK(ideal_classify(F, {RElem{0, 1, 0, 0}, RElem{0, 0, 1, 0}}) ==
        IdealClass{IdealTag::MaximalUV});
  CHECK(ideal_classify(F, {RElem{0, 1, 1, 0}, RElem{0, 1, 2, 0}}) ==
        IdealClass{IdealTag::MaximalUV});
  CHECK(ideal_classify(F, {RElem{0, 1, 0, 0}, RElem{0, 0, 0, 3}}) == IdealClass{IdealTag::U});
  CHECK(ideal_classify(F, {RElem{0, 1, 2, 0}, RElem{0, 2, 4, 1}}) ==
        IdealClass{IdealTag::UPlusAlphaV, 2});
  CHECK(ideal_classify(F, {}) == IdealClass{IdealTag::Zero});
}

TEST_CASE("quotient ring multiplication wraps with the sign") {
  PrimeField F(5);
  Modulus neg(Sign::Negacyclic, 5);
  Modulus cyc(Sign::Cyclic, 5);
  RPoly x = parse_rpoly("x", F, neg);
  RPoly x4 = parse_rpoly("x^4", F, neg);
  CHECK(x * x4 == parse_rpoly("4", F, neg)); // x^5 = -1
  RPoly xc = parse_rpoly("x", F, cyc);
  RPoly x4c = parse_rpoly("x^4", F, cyc);
  CHECK(xc * x4c == parse_rpoly("1", F, cyc)); // x^5 = 1

  // u^2 = 0 in the polynomial ring as well
  RPoly s = parse_rpoly("x+1;1;0;0", F, neg);
  RPoly t = parse_rpoly("x+1;4;0;0", F, neg);
  CHECK(s * t == parse_rpoly("(x+1)^2", F, neg));
}

TEST_CASE("vector embedding round trip") {
  PrimeField F(3);
  Modulus mod(Sign::Negacyclic, 9);
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    RPoly f = random_rpoly(rng, F, mod);
    CHECK(RPoly::from_vector(F, mod, f.to_vector()) == f);
  }
  RPoly g = parse_rpoly("1;0;x;0", F, mod);
  std::vector<int64_t> v = g.to_vector();
  REQUIRE(v.size() == 36);
  CHECK(v[0] == 1);  // position 0, component 1
  CHECK(v[6] == 1);  // position 1, component v
}

TEST_CASE("twist map is a weight preserving involution") {
  PrimeField F(5);
  Modulus neg(Sign::Negacyclic, 5);
  RPoly f = parse_rpoly("x+1;0;0;0", F, neg);
  RPoly pf = phi(f);
  CHECK(pf.modulus() == neg.flipped());
  CHECK(pf == parse_rpoly("1+4x;0;0;0", F, neg.flipped()));
  CHECK(phi(pf) == f);
  CHECK(phi(parse_rpoly("0;0;0;1", F, neg)) == parse_rpoly("0;0;0;1", F, neg.flipped()));

  SuiteResult res = phi_suite({3, 5, 7}, {3, 5, 9}, 15, 2024);
  CHECK(res.ok());
  CHECK(res.checked == 3 * 3 * 15 * 4);
}

TEST_CASE("regular division in the quotient") {
  PrimeField F(5);
  Modulus mod(Sign::Negacyclic, 5);
  RPoly f = parse_rpoly("(x+1)^3;2x;3;1", F, mod);
  RPoly g = parse_rpoly("(x+1);1;0;2", F, mod);
  RPolyDivMod qr = rpoly_divmod_regular(f, g);
  CHECK(qr.quot * g + qr.rem == f);
  for (size_t k = 0; k < 4; ++k) {
    CHECK((qr.rem.comp(k).is_zero() || *qr.rem.comp(k).degree() < 1));
  }
  CHECK(throws_kind(errc::not_regular,
                    [&] { rpoly_divmod_regular(f, parse_rpoly("0;1;0;0", F, mod)); }));

  CHECK(divides_ring_modulus(parse_rpoly("x+1;0;0;0", F, mod)));
  CHECK(divides_ring_modulus(parse_rpoly("x+1;x;0;0", F, mod)));
  CHECK(divides_ring_modulus(parse_rpoly("x+1;1;0;0", F, mod)));
  CHECK(!divides_ring_modulus(parse_rpoly("x+2;0;0;0", F, mod)));
  CHECK(!divides_ring_modulus(parse_rpoly("(x+1)^4;1;0;0", F, mod)));
}
