#include <cstdint>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "negaring/fieldpoly.hpp"
#include "negaring/parse.hpp"

using namespace negaring;

TEST_CASE("prime field arithmetic") {
  PrimeField F(7);
  CHECK(F.reduce(-1) == 6);
  CHECK(F.reduce(15) == 1);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(4, 5) == 6);
  CHECK(F.neg(0) == 0);
  CHECK(F.neg(3) == 4);
  for (int64_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.pow(3, 0) == 1);

  CHECK(throws_kind(errc::invalid_argument, [] { PrimeField(2); }));
  CHECK(throws_kind(errc::invalid_argument, [] { PrimeField(9); }));
  CHECK(throws_kind(errc::invalid_argument, [] { PrimeField(1); }));
  CHECK(throws_kind(errc::not_invertible, [&] { F.inv(0); }));
}

TEST_CASE("polynomial normalization and accessors") {
  PrimeField F(5);
  FpPoly f(F, {1, 2, 0, 0});
  CHECK(f.degree() == 1);
  CHECK(f.coeffs() == std::vector<int64_t>{1, 2});
  CHECK(FpPoly(F, {0, 0}).is_zero());
  CHECK(!FpPoly(F).degree().has_value());
  CHECK(FpPoly(F, {0, 7}).coeff(1) == 2);
  CHECK(FpPoly::monomial(F, 3).degree() == 3);
  CHECK(FpPoly(F, {2, 4}).monic() == FpPoly(F, {3, 1}));
  CHECK(FpPoly(F, {1, 3}).lead() == 3);
}

TEST_CASE("polynomial ring axioms on random draws") {
  for (int64_t p : {3, 5, 7}) {
    PrimeField F(p);
    uint64_t s = 12345;
    auto draw = [&] {
      std::vector<int64_t> c(6);
      for (auto& v : c) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        v = static_cast<int64_t>((s >> 33) % static_cast<uint64_t>(p));
      }
      return FpPoly(F, c);
    };
    for (int i = 0; i < 500; ++i) {
      FpPoly a = draw(), b = draw(), c = draw();
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == FpPoly(F));
      CHECK(a + (-a) == FpPoly(F));
    }
  }
}

TEST_CASE("division with remainder") {
  PrimeField F(5);
  FpPoly m = parse_poly("x^5+1", F);
  FpPoly g = parse_poly("x+1", F);
  DivModResult r = poly_divmod(m, g);
  CHECK(r.quot == parse_poly("1+4x+x^2+4x^3+x^4", F));
  CHECK(r.rem.is_zero());
  CHECK(r.quot * g + r.rem == m);

  DivModResult s = poly_divmod(parse_poly("x^3+2x+1", F), parse_poly("x^2+3", F));
  CHECK(s.quot * parse_poly("x^2+3", F) + s.rem == parse_poly("x^3+2x+1", F));
  CHECK(*s.rem.degree() < 2);

  CHECK(divides(g, m));
  CHECK(!divides(parse_poly("x+2", F), m));
  CHECK(divides(g, FpPoly(F)));
  CHECK(throws_kind(errc::division_by_zero, [&] { poly_divmod(m, FpPoly(F)); }));
}

TEST_CASE("gcd is monic and correct") {
  PrimeField F(3);
  FpPoly a = parse_poly("(x+1)^2", F);
  FpPoly b = parse_poly("(x+1)*(x+2)", F);
  CHECK(poly_gcd(a, b) == parse_poly("x+1", F));
  CHECK(poly_gcd(a, FpPoly(F)) == a.monic());
  CHECK(poly_gcd(FpPoly(F), b) == b.monic());
  CHECK(poly_gcd(2 * a, b) == parse_poly("x+1", F));
  CHECK(throws_kind(errc::undefined_gcd, [&] { poly_gcd(FpPoly(F), FpPoly(F)); }));
}

TEST_CASE("freshman dream powers") {
  for (int64_t p : {3, 5, 7}) {
    PrimeField F(p);
    FpPoly xp1 = parse_poly("x+1", F);
    for (uint64_t k = 1; k <= 4; ++k) {
      FpPoly lhs = poly_pow(xp1, static_cast<uint64_t>(p) * k);
      FpPoly rhs = poly_pow(parse_poly("x^" + std::to_string(p) + "+1", F), k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("powmod wraps the modulus") {
  PrimeField F(5);
  FpPoly m = parse_poly("x^5+1", F);
  CHECK(poly_powmod(parse_poly("x", F), 5, m) == parse_poly("4", F));
  CHECK(poly_powmod(parse_poly("x", F), 6, m) == parse_poly("4x", F));
}

TEST_CASE("monic divisor enumeration") {
  PrimeField F(5);
  std::vector<FpPoly> ds = monic_divisors(parse_poly("x^3+1", F));
  REQUIRE(ds.size() == 4);
  CHECK(ds[0] == parse_poly("1", F));
  CHECK(ds[1] == parse_poly("x+1", F));
  CHECK(ds[2] == parse_poly("x^2+4x+1", F));
  CHECK(ds[3] == parse_poly("x^3+1", F));

  // (x+1)^5 over F_5: divisors are exactly the six powers
  std::vector<FpPoly> ps = monic_divisors(parse_poly("x^5+1", F));
  REQUIRE(ps.size() == 6);
  for (size_t t = 0; t < 6; ++t) CHECK(ps[t] == poly_pow(parse_poly("x+1", F), t));

  PrimeField F7(7);
  CHECK(throws_kind(errc::budget_exceeded,
                    [&] { monic_divisors(parse_poly("x^9+1", F7), 1000000); }));
}
