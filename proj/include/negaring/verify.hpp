#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "negaring/codes.hpp"
#include "negaring/distance.hpp"

namespace negaring {

struct SuiteResult {
  std::string name;
  size_t checked = 0;
  size_t failed = 0;
  std::vector<std::string> failures; // first few witnesses

  bool ok() const { return failed == 0; }
  void note(bool pass, const std::string& witness);
};

// phi on random pairs: additivity, multiplicativity, involution, weight
// preservation. `pairs` draws per (p, n) grid point.
SuiteResult phi_suite(const std::vector<int64_t>& primes, const std::vector<size_t>& lengths,
                      size_t pairs, uint64_t seed);

// Random presentations: canonical form passes the seven properties, the
// dimension formula, spanning-set closure, idempotence, and invariance
// under unit rescaling / row mixing / redundant generators.
SuiteResult structure_suite(const PrimeField& field, const Modulus& mod, size_t trials,
                            uint64_t seed);

// Both oracles agree whenever both run within budget (small codes only).
SuiteResult oracle_suite(const PrimeField& field, const Modulus& mod, size_t trials,
                         uint64_t seed, const Budgets& budgets, size_t max_dim);

// Oracle distance equals the oracle distance of the cyclic counterpart.
SuiteResult transfer_suite(const PrimeField& field, const Modulus& mod, size_t trials,
                           uint64_t seed, const Budgets& budgets, size_t max_dim);

std::vector<SuiteResult> run_verify(int64_t p, size_t n, size_t trials, uint64_t seed,
                                    const Budgets& budgets);

} // namespace negaring
