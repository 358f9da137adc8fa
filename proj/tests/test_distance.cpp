#include "doctest.h"
#include "helpers.hpp"
#include "negaring/distance.hpp"
#include "negaring/parse.hpp"
#include "negaring/verify.hpp"

using namespace negaring;

namespace {

NegacyclicCode uv_code(const PrimeField& F, const Modulus& mod, size_t t) {
  RPoly gen = RPoly::from_component(F, mod, 3, poly_pow(FpPoly(F, {1, 1}), t));
  return NegacyclicCode::from_generators(F, mod, {gen});
}

} // namespace

TEST_CASE("hamming weight counts nonzero symbols") {
  PrimeField F(5);
  Modulus mod(Sign::Negacyclic, 5);
  CHECK(hamming_weight(parse_rpoly("0;0;0;(x+1)^4", F, mod)) == 5);
  CHECK(hamming_weight(parse_rpoly("0;1;1;0", F, mod)) == 1);
  CHECK(hamming_weight(parse_rpoly("0;0;0;0", F, mod)) == 0);
  CHECK(hamming_weight(parse_rpoly("x+1;0;x^4;0", F, mod)) == 3);
}

TEST_CASE("digit classification") {
  PAdicExpansion full = p_adic_classify(3, 2, 4); // 4 = 11 base 3
  CHECK(full.digits == std::vector<int64_t>{1, 1});
  CHECK(full.kind == ExpansionKind::FullExpansion);
  CHECK(full.q == 2);

  PAdicExpansion zero = p_adic_classify(3, 2, 3); // 3 = 10 base 3
  CHECK(zero.kind == ExpansionKind::ZeroExpansion);
  CHECK(zero.q == 1);

  PAdicExpansion nz = p_adic_classify(3, 3, 10); // 10 = 101 base 3
  CHECK(nz.digits == std::vector<int64_t>{1, 0, 1});
  CHECK(nz.kind == ExpansionKind::NonZeroExpansion);
  CHECK(nz.q == 1);

  CHECK(p_adic_classify(3, 3, 13).kind == ExpansionKind::FullExpansion); // 111
  CHECK(p_adic_classify(3, 3, 22).kind == ExpansionKind::FullExpansion); // 211
  PAdicExpansion z18 = p_adic_classify(3, 3, 18); // 200
  CHECK(z18.kind == ExpansionKind::ZeroExpansion);
  CHECK(z18.q == 1);

  CHECK(throws_kind(errc::out_of_range, [] { p_adic_classify(3, 2, 0); }));
  CHECK(throws_kind(errc::out_of_range, [] { p_adic_classify(3, 2, 9); }));
}

TEST_CASE("oracle distances of the uv powers, length 9") {
  PrimeField F(3);
  Modulus mod(Sign::Negacyclic, 9);
  const size_t expected[] = {2, 2, 2, 3, 3, 3, 6, 9};
  for (size_t t = 1; t <= 8; ++t) {
    OracleResult r = min_distance_support(uv_code(F, mod, t), 1000000);
    CHECK(r.d == expected[t - 1]);
    CHECK(hamming_weight(r.witness) == r.d);
  }
}

TEST_CASE("oracle distances of the uv powers, length 5") {
  PrimeField F(5);
  Modulus mod(Sign::Negacyclic, 5);
  for (size_t t = 1; t <= 4; ++t) {
    OracleResult r = min_distance_support(uv_code(F, mod, t), 1000000);
    CHECK(r.d == t + 1);
  }
}

TEST_CASE("closed formula branch values, length 9") {
  PrimeField F(3);
  Modulus mod(Sign::Negacyclic, 9);
  const size_t expected[] = {2, 2, 2, 4, 6, 3, 6, 9};
  const char* branch[] = {"small-t4", "small-t4", "small-t4", "full",
                          "full",     "zero",     "full",     "full"};
  for (size_t t = 1; t <= 8; ++t) {
    FormulaResult r = distance_formula(uv_code(F, mod, t));
    CHECK(r.d == expected[t - 1]);
    CHECK(r.branch == branch[t - 1]);
  }
}

TEST_CASE("formula and oracle disagree at the known points") {
  // the oracle is ground truth; the printed closed form overshoots here
  PrimeField F(3);
  Modulus mod(Sign::Negacyclic, 9);
  Budgets b;
  for (size_t t : {4, 5}) {
    DistanceReport rep = analyze_distance(uv_code(F, mod, t), b);
    REQUIRE(rep.d_oracle.has_value());
    CHECK(*rep.d_oracle == 3);
    CHECK(rep.agreement == false);
  }
  DistanceReport ok = analyze_distance(uv_code(F, mod, 6), b);
  CHECK(ok.agreement == true);
}

TEST_CASE("length 27 representatives") {
  PrimeField F(3);
  Modulus mod(Sign::Negacyclic, 27);
  Budgets b;

  DistanceReport t10 = analyze_distance(uv_code(F, mod, 10), b);
  CHECK(t10.d_oracle == 3);
  CHECK(t10.d_formula == 4);
  CHECK(t10.method == "support");
  CHECK(t10.agreement == false);

  DistanceReport t18 = analyze_distance(uv_code(F, mod, 18), b);
  CHECK(t18.d_oracle == 3);
  CHECK(t18.d_formula == 3);
  CHECK(t18.agreement == true);

  // support exhausts its budget at this dimension; the walker takes over
  DistanceReport t22 = analyze_distance(uv_code(F, mod, 22), b);
  CHECK(t22.d_oracle == 9);
  CHECK(t22.d_formula == 12);
  CHECK(t22.method == "enum");
  CHECK(t22.agreement == false);
}

TEST_CASE("formula corner branches") {
  PrimeField F(5);
  Modulus mod(Sign::Negacyclic, 5);
  NegacyclicCode whole_uv = NegacyclicCode::from_generators(
      F, mod, {parse_rpoly("0;0;0;1", F, mod)});
  FormulaResult r = distance_formula(whole_uv);
  CHECK(r.d == 1);
  CHECK(r.branch == "uv-unit");

  CHECK(throws_kind(errc::zero_code, [&] {
    distance_formula(NegacyclicCode::from_generators(F, mod, {}));
  }));

  FormulaResult s = distance_formula(uv_code(F, mod, 1));
  CHECK(s.d == 2);
  CHECK(s.branch == "small-t4");
  CHECK(!s.hypothesis_met); // t1 = t2 = n blocks the strict chain

  PrimeField F7(7);
  Modulus mod3(Sign::Negacyclic, 3);
  CHECK(throws_kind(errc::not_applicable, [&] {
    distance_formula(NegacyclicCode::from_generators(
        F7, mod3, {parse_rpoly("0;0;0;1", F7, mod3)}));
  }));
}

TEST_CASE("oracles agree with each other") {
  Budgets b;
  SuiteResult s5 = oracle_suite(PrimeField(5), Modulus(Sign::Negacyclic, 5), 60, 17, b, 12);
  CHECK(s5.ok());
  CHECK(s5.checked >= 20);
  SuiteResult s9 = oracle_suite(PrimeField(3), Modulus(Sign::Negacyclic, 9), 40, 18, b, 12);
  CHECK(s9.ok());
}

TEST_CASE("distance carries over to the cyclic mirror") {
  Budgets b;
  SuiteResult s = transfer_suite(PrimeField(5), Modulus(Sign::Negacyclic, 5), 12, 19, b, 12);
  CHECK(s.ok());
  CHECK(s.checked > 0);
}

TEST_CASE("budget and degenerate handling") {
  PrimeField F(5);
  Modulus mod(Sign::Negacyclic, 5);
  NegacyclicCode c = uv_code(F, mod, 4);
  CHECK(throws_kind(errc::budget_exceeded, [&] { min_distance_support(c, 1); }));
  CHECK(throws_kind(errc::budget_exceeded, [&] { min_distance_enum(c, 1); }));

  DistanceReport skipped = analyze_distance(c, {1, 1});
  CHECK(!skipped.d_oracle.has_value());
  CHECK(!skipped.oracle_undefined);
  CHECK(skipped.method == "formula");
  CHECK(skipped.d_formula == 5);
  CHECK(!skipped.agreement.has_value());

  NegacyclicCode zero = NegacyclicCode::from_generators(F, mod, {});
  CHECK(throws_kind(errc::zero_code, [&] { min_distance_support(zero, 100); }));
  DistanceReport zrep = analyze_distance(zero, {100, 100});
  CHECK(zrep.oracle_undefined);
  CHECK(zrep.method == "none");

  OracleResult direct = min_distance_enum(uv_code(F, mod, 3), 1000);
  CHECK(direct.d == 4);
  CHECK(hamming_weight(direct.witness) == 4);
}
