#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "negaring/codes.hpp"

namespace negaring {

class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next(uint64_t bound) { return bound == 0 ? 0 : gen_() % bound; }

  int64_t fp(const PrimeField& field) {
    return static_cast<int64_t>(next(static_cast<uint64_t>(field.p())));
  }

private:
  std::mt19937_64 gen_;
};

inline FpPoly random_fp_poly(Rng& rng, const PrimeField& field, size_t len) {
  std::vector<int64_t> c(len);
  for (auto& v : c) v = rng.fp(field);
  return FpPoly(field, c);
}

inline RPoly random_rpoly(Rng& rng, const PrimeField& field, const Modulus& mod) {
  std::array<FpPoly, 4> c = {random_fp_poly(rng, field, mod.n), random_fp_poly(rng, field, mod.n),
                             random_fp_poly(rng, field, mod.n), random_fp_poly(rng, field, mod.n)};
  return RPoly(field, mod, c);
}

// A generator whose lowest nonzero layer is chosen uniformly; uniform draws
// almost always contain a unit, which would make every sampled code the
// whole ring.
inline RPoly random_structured_gen(Rng& rng, const PrimeField& field, const Modulus& mod,
                                   const std::vector<FpPoly>& divisors) {
  size_t layer = rng.next(4);
  const FpPoly& d = divisors[rng.next(divisors.size())];
  FpPoly lead = d * random_fp_poly(rng, field, mod.n >= *d.degree() ? mod.n - *d.degree() : 1);
  if (lead.is_zero()) lead = d;
  FpPoly zero(field);
  std::array<FpPoly, 4> c = {zero, zero, zero, zero};
  c[layer] = lead;
  for (size_t k = layer + 1; k < 4; ++k) c[k] = random_fp_poly(rng, field, mod.n);
  return RPoly(field, mod, c);
}

inline NegacyclicCode random_code(Rng& rng, const PrimeField& field, const Modulus& mod,
                                  const std::vector<FpPoly>& divisors, size_t max_gens = 2) {
  size_t k = 1 + rng.next(max_gens);
  std::vector<RPoly> gens;
  for (size_t i = 0; i < k; ++i) gens.push_back(random_structured_gen(rng, field, mod, divisors));
  return NegacyclicCode::from_generators(field, mod, gens);
}

// A different presentation of the same code: unipotent rescaling, cross
// additions, a redundant member, and a shuffle.
inline std::vector<RPoly> perturb_presentation(Rng& rng, const NegacyclicCode& code) {
  const PrimeField& F = code.field();
  const Modulus& mod = code.modulus();
  std::vector<RPoly> gens = code.generators();
  if (gens.empty()) return gens;

  for (auto& g : gens) {
    FpPoly one(F, {1});
    RPoly unit(F, mod, {one, random_fp_poly(rng, F, mod.n), random_fp_poly(rng, F, mod.n),
                        random_fp_poly(rng, F, mod.n)});
    g = unit * g;
  }
  for (size_t round = 0; round < 2; ++round) {
    for (size_t i = 0; i < gens.size(); ++i) {
      size_t j = rng.next(gens.size());
      if (j == i) continue;
      gens[i] = gens[i] + random_fp_poly(rng, F, mod.n) * gens[j];
    }
  }
  { // redundant member from the span
    const auto& rows = code.basis().rows();
    Row acc(4 * mod.n, 0);
    for (const auto& row : rows) {
      int64_t c = rng.fp(F);
      if (c == 0) continue;
      for (size_t idx = 0; idx < acc.size(); ++idx) acc[idx] = F.add(acc[idx], F.mul(c, row[idx]));
    }
    gens.push_back(RPoly::from_vector(F, mod, acc));
  }
  for (size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rng.next(i)]);
  return gens;
}

} // namespace negaring
