#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "negaring/codes.hpp"
#include "negaring/distance.hpp"

namespace negaring {

struct Skeleton {
  std::array<FpPoly, 4> g; // monic divisors of the modulus, both chains hold
  size_t t(size_t i) const { return *g.at(i - 1).degree(); }
};

// Monic divisors of the modulus in (degree, lex) order; fast path when the
// modulus is a pure power of x+1.
std::vector<FpPoly> modulus_divisors(const PrimeField& field, const Modulus& mod,
                                     uint64_t budget = 1'000'000);

// All divisor tuples (g1,g2,g3,g4) with g4|g2|g1|M and g4|g3|g1. Absent
// layers appear as the modulus itself (degree n).
std::vector<Skeleton> enumerate_skeletons(const PrimeField& field, const Modulus& mod,
                                          uint64_t divisor_budget = 1'000'000);

struct CatalogEntry {
  NegacyclicCode code;
  DistanceReport distance;
  std::string source;
};

struct CatalogOptions {
  std::string family = "all"; // all | free | single-nonfree | uv-only
  uint64_t coeff_budget = 64; // exhaustive tail enumeration cap per scheme point
  size_t samples = 5;         // random draws when not exhaustive (zero draw always added)
  uint64_t seed = 0;
  Budgets budgets{};
  uint64_t divisor_budget = 1'000'000;
};

std::vector<CatalogEntry> catalog_codes(const PrimeField& field, const Modulus& mod,
                                        const CatalogOptions& opt);

// Hard-coded row families of the three p=5, n=5 tables.
enum class RowConstraint { None, ProductZero01, Eq01OrEq23, ProductZero02 };

struct TableRow {
  int table;
  int row; // 1-based within its table
  std::string label;
  size_t expected_rank;
  size_t expected_d;
  RowConstraint constraint;
  std::function<std::vector<RPoly>(const PrimeField&, const Modulus&,
                                   const std::array<int64_t, 6>&)>
      build;
};

const std::vector<TableRow>& table_rows();

struct RowVerdict {
  int table = 0;
  int row = 0;
  std::string label;
  size_t expected_rank = 0;
  size_t got_rank = 0;
  size_t expected_d = 0;
  size_t got_d = 0;
  bool rank_match = false;
  bool d_match = false;
  std::string verdict; // "match" or "mismatch(...)"
  std::string detail;  // parameters and witness for the first mismatching draw
};

struct TablesReport {
  std::vector<CatalogEntry> entries; // one boundary representative per row
  std::vector<RowVerdict> verdicts;
};

// Boundary (all-zero and adjusted all-one) plus seeded random parameter draws
// for every table row, checked against the printed rank and distance.
TablesReport reproduce_tables(uint64_t seed, const Budgets& budgets);

} // namespace negaring
