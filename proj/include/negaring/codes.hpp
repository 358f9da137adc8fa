#pragma once

#include <array>
#include <string>
#include <vector>

#include "negaring/linear.hpp"
#include "negaring/ring.hpp"

namespace negaring {

// F_p-span of the ideal generated by gens: closure under x-shift (with the
// modulus sign), u, and v. Rows are position-major (column = 4*pos + comp).
EchelonBasis fp_closure(const PrimeField& field, const Modulus& mod,
                        const std::vector<RPoly>& gens);

// F_p-span of {m*e : m in {1,u,v,uv}, e in elements} with no x-shifts.
EchelonBasis r_span(const PrimeField& field, const Modulus& mod,
                    const std::vector<RPoly>& elements);

struct SpanningSet {
  std::vector<RPoly> elements;
  size_t rank = 0;
  size_t free_rank = 0;
};

struct PropertyCheck {
  bool ok = false;
  std::string witness; // the failed claim, empty when ok
};

struct PropertyReport {
  std::array<PropertyCheck, 7> checks;
  std::vector<std::string> s_polys;

  bool all_ok() const {
    for (const auto& c : checks) {
      if (!c.ok) return false;
    }
    return true;
  }
};

struct CoprimeForm {
  RPoly gen1;            // g1 + u g2 + uv g13
  RPoly gen2;            // v g3 + uv g4
  bool closure_matches;  // false when the code has no two-generator form
};

// A code in canonical four-generator form. Layer convention: when a torsion
// projection is zero, g_i is x^n -+ 1 itself (degree n) and A_i is zero.
class NegacyclicCode {
public:
  static NegacyclicCode from_generators(PrimeField field, Modulus mod,
                                        const std::vector<RPoly>& gens);

  const PrimeField& field() const { return field_; }
  const Modulus& modulus() const { return mod_; }
  size_t n() const { return mod_.n; }

  const FpPoly& g(size_t i) const;          // i in 1..4
  const FpPoly& gij(size_t i, size_t j) const; // (1,1) (1,2) (1,3) (2,2) (2,3) (3,3)
  size_t r(size_t i) const;                 // deg g_i; n for an absent layer
  size_t r_prime() const { return std::min(r(2), r(3)); }

  RPoly A(size_t i) const;                  // zero when the layer is absent
  std::vector<RPoly> generators() const;    // the nonzero A_i

  const EchelonBasis& basis() const { return basis_; }
  size_t dim_fp() const { return basis_.dim(); }
  size_t rank() const { return n() + r(1) + r_prime() - r(2) - r(3) - r(4); }
  size_t free_rank() const { return n() - r(1); }

  bool is_zero() const { return r(1) == n() && r(2) == n() && r(3) == n() && r(4) == n(); }
  bool is_free() const { return g_[0] == g_[3]; }
  RPoly free_generator() const;

  SpanningSet spanning_set() const;
  PropertyReport verify_structure() const;
  CoprimeForm coprime_form() const;

  // Generators of the cyclic code A with phi(A) = C (or the reverse when this
  // code is itself cyclic).
  std::vector<RPoly> cyclic_counterpart() const;

  bool operator==(const NegacyclicCode& o) const;

private:
  NegacyclicCode(PrimeField field, Modulus mod);

  PrimeField field_;
  Modulus mod_;
  std::array<FpPoly, 4> g_;
  std::array<FpPoly, 6> coef_; // g11, g12, g13, g22, g23, g33
  EchelonBasis basis_;
};

// Property checks on an arbitrary tuple; used for negative controls.
PropertyReport verify_structure_tuple(const PrimeField& field, const Modulus& mod,
                                      const std::array<FpPoly, 4>& g,
                                      const std::array<FpPoly, 6>& coef);

} // namespace negaring
