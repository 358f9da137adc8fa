#include "negaring/verify.hpp"

#include "negaring/catalog.hpp"
#include "negaring/errors.hpp"
#include "negaring/parse.hpp"
#include "negaring/sampling.hpp"

namespace negaring {

void SuiteResult::note(bool pass, const std::string& witness) {
  ++checked;
  if (!pass) {
    ++failed;
    if (failures.size() < 8) failures.push_back(witness);
  }
}

SuiteResult phi_suite(const std::vector<int64_t>& primes, const std::vector<size_t>& lengths,
                      size_t pairs, uint64_t seed) {
  SuiteResult res;
  res.name = "phi";
  Rng rng(seed);
  for (int64_t p : primes) {
    PrimeField F(p);
    for (size_t n : lengths) {
      Modulus mod(Sign::Negacyclic, n);
      for (size_t i = 0; i < pairs; ++i) {
        RPoly f = random_rpoly(rng, F, mod);
        RPoly g = random_rpoly(rng, F, mod);
        std::string at = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " f=" +
                         to_string(f) + " g=" + to_string(g);
        res.note(phi(f + g) == phi(f) + phi(g), "additivity " + at);
        res.note(phi(f * g) == phi(f) * phi(g), "multiplicativity " + at);
        res.note(phi(phi(f)) == f, "involution " + at);
        res.note(hamming_weight(phi(f)) == hamming_weight(f), "weight " + at);
      }
    }
  }
  return res;
}

SuiteResult structure_suite(const PrimeField& field, const Modulus& mod, size_t trials,
                            uint64_t seed) {
  SuiteResult res;
  res.name = "structure";
  Rng rng(seed);
  std::vector<FpPoly> divisors = modulus_divisors(field, mod);
  for (size_t i = 0; i < trials; ++i) {
    NegacyclicCode code = random_code(rng, field, mod, divisors);
    std::string at = " at t=(" + std::to_string(code.r(1)) + "," + std::to_string(code.r(2)) +
                     "," + std::to_string(code.r(3)) + "," + std::to_string(code.r(4)) + ")";

    PropertyReport pr = code.verify_structure();
    std::string witness;
    for (const auto& c : pr.checks) {
      if (!c.ok) witness += c.witness + "; ";
    }
    res.note(pr.all_ok(), "properties: " + witness + at);

    size_t rsum = code.r(1) + code.r(2) + code.r(3) + code.r(4);
    res.note(code.dim_fp() == 4 * mod.n - rsum, "dimension formula" + at);

    SpanningSet span = code.spanning_set();
    res.note(fp_closure(field, mod, span.elements) == code.basis(),
             "spanning closure" + at);
    res.note(span.rank == code.rank() && span.free_rank == code.free_rank(),
             "spanning counts" + at);

    if (!code.is_zero()) {
      NegacyclicCode again = NegacyclicCode::from_generators(field, mod, code.generators());
      res.note(again == code, "idempotence" + at);
      NegacyclicCode other =
          NegacyclicCode::from_generators(field, mod, perturb_presentation(rng, code));
      res.note(other == code, "presentation invariance" + at);
    }

    if (code.is_free() && !code.is_zero()) {
      RPoly a1 = code.free_generator();
      std::vector<RPoly> shifts;
      RPoly w = a1;
      FpPoly x(field, {0, 1});
      for (size_t k = 0; k < mod.n - code.r(1); ++k) {
        shifts.push_back(w);
        w = x * w;
      }
      res.note(r_span(field, mod, shifts).dim() == 4 * (mod.n - code.r(1)),
               "free module shifts" + at);
    }
  }
  return res;
}

SuiteResult oracle_suite(const PrimeField& field, const Modulus& mod, size_t trials,
                         uint64_t seed, const Budgets& budgets, size_t max_dim) {
  SuiteResult res;
  res.name = "oracle consistency";
  Rng rng(seed);
  std::vector<FpPoly> divisors = modulus_divisors(field, mod);
  for (size_t i = 0; i < trials; ++i) {
    NegacyclicCode code = random_code(rng, field, mod, divisors);
    if (code.is_zero() || code.dim_fp() > max_dim) continue;
    try {
      OracleResult a = min_distance_support(code, budgets.support);
      OracleResult b = min_distance_enum(code, budgets.enumeration);
      res.note(a.d == b.d, "support " + std::to_string(a.d) + " vs enum " +
                               std::to_string(b.d) + " at dim " +
                               std::to_string(code.dim_fp()));
    } catch (const error& e) {
      if (e.kind() != errc::budget_exceeded) throw;
    }
  }
  return res;
}

SuiteResult transfer_suite(const PrimeField& field, const Modulus& mod, size_t trials,
                           uint64_t seed, const Budgets& budgets, size_t max_dim) {
  SuiteResult res;
  res.name = "distance transfer";
  Rng rng(seed);
  std::vector<FpPoly> divisors = modulus_divisors(field, mod);
  size_t done = 0;
  for (size_t attempts = 0; done < trials && attempts < trials * 40; ++attempts) {
    NegacyclicCode code = random_code(rng, field, mod, divisors);
    if (code.is_zero() || code.dim_fp() > max_dim) continue;
    ++done;
    NegacyclicCode mirror =
        NegacyclicCode::from_generators(field, mod.flipped(), code.cyclic_counterpart());
    res.note(mirror.dim_fp() == code.dim_fp(),
             "counterpart dimension at dim " + std::to_string(code.dim_fp()));
    try {
      OracleResult a = min_distance_support(code, budgets.support);
      OracleResult b = min_distance_support(mirror, budgets.support);
      res.note(a.d == b.d, "d " + std::to_string(a.d) + " vs counterpart " +
                               std::to_string(b.d));
    } catch (const error& e) {
      if (e.kind() != errc::budget_exceeded) throw;
    }
  }
  return res;
}

std::vector<SuiteResult> run_verify(int64_t p, size_t n, size_t trials, uint64_t seed,
                                    const Budgets& budgets) {
  PrimeField F(p);
  Modulus mod(Sign::Negacyclic, n);
  std::vector<SuiteResult> out;
  out.push_back(phi_suite({p}, {n}, trials, seed));
  out.push_back(structure_suite(F, mod, trials, seed + 1));
  out.push_back(oracle_suite(F, mod, trials / 2 + 1, seed + 2, budgets, 12));
  out.push_back(transfer_suite(F, mod, trials / 4 + 1, seed + 3, budgets, 12));
  return out;
}

} // namespace negaring
