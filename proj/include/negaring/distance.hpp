#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negaring/codes.hpp"

namespace negaring {

size_t hamming_weight(const RPoly& f);

enum class ExpansionKind { ZeroExpansion, NonZeroExpansion, FullExpansion };

struct PAdicExpansion {
  int64_t p = 0;
  size_t l = 0;
  int64_t t = 0;
  std::vector<int64_t> digits; // b_0 .. b_{l-1}
  size_t q = 0;                // leading nonzero digits, counted from b_{l-1}
  ExpansionKind kind = ExpansionKind::FullExpansion;
};

// Digit pattern of t in base p with exactly l digits; requires 0 < t < p^l.
PAdicExpansion p_adic_classify(int64_t p, size_t l, int64_t t);

struct Budgets {
  uint64_t support = 1'000'000;      // kernel tests
  uint64_t enumeration = 10'000'000; // codewords visited
};

struct OracleResult {
  size_t d;
  RPoly witness; // a codeword of weight d
  uint64_t work;
};

// Exact minimum weight by ascending support size: for each candidate support,
// test whether the code meets the coordinate subspace vanishing outside it.
OracleResult min_distance_support(const NegacyclicCode& code, uint64_t budget);

// Exact minimum weight by walking all p^dim - 1 nonzero codewords.
OracleResult min_distance_enum(const NegacyclicCode& code, uint64_t budget);

struct FormulaResult {
  size_t d = 0;
  bool hypothesis_met = false; // strict chains t1 > t2 > t4 > 0, t1 > t3 > t4 > 0
  std::string branch;          // "uv-unit", "small-t4", "zero", "nonzero", "full"
  std::optional<PAdicExpansion> expansion;
};

// Closed-form distance for length p^l; evaluated even when the chain
// hypothesis fails, with the flag reporting the violation.
FormulaResult distance_formula(const NegacyclicCode& code);

struct DistanceReport {
  std::optional<size_t> d_oracle; // empty: skipped (budget) or undefined
  bool oracle_undefined = false;  // zero code has no distance
  std::optional<size_t> d_formula; // empty: not applicable
  bool hypothesis_met = false;
  std::string method; // "support", "enum", "formula", "none"
  std::optional<bool> agreement; // set when oracle and formula both ran
  std::optional<size_t> witness_weight;
};

DistanceReport analyze_distance(const NegacyclicCode& code, const Budgets& budgets);

} // namespace negaring
