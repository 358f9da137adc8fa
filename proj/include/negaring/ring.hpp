#pragma once

#include <array>
#include <cstdint>

#include "negaring/fieldpoly.hpp"

namespace negaring {

// Element of R = F_p + uF_p + vF_p + uvF_p with u^2 = v^2 = 0, uv = vu.
struct RElem {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
  int64_t d = 0;

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool operator==(const RElem& o) const = default;
};

RElem r_add(const PrimeField& F, const RElem& x, const RElem& y);
RElem r_sub(const PrimeField& F, const RElem& x, const RElem& y);
RElem r_mul(const PrimeField& F, const RElem& x, const RElem& y);

inline bool r_is_unit(const RElem& x) { return x.a != 0; }

// The seven ideal shapes of R: 0, <u>, <v>, <uv>, <u+av> (a != 0), <u,v>, R.
enum class IdealTag { Zero, U, V, UV, UPlusAlphaV, MaximalUV, Unit };

struct IdealClass {
  IdealTag tag;
  int64_t alpha = 0; // nonzero only for UPlusAlphaV

  bool operator==(const IdealClass& o) const = default;
};

// Classifies the principal ideal <x>. A single element never generates <u,v>.
IdealClass r_classify(const PrimeField& F, const RElem& x);

// Classifies the ideal generated by a set of elements; may yield MaximalUV.
IdealClass ideal_classify(const PrimeField& F, const std::vector<RElem>& gens);

enum class Sign { Cyclic, Negacyclic }; // x^n - 1 vs x^n + 1

struct Modulus {
  Sign sign;
  size_t n;

  Modulus(Sign s, size_t length);

  bool operator==(const Modulus& o) const = default;

  Modulus flipped() const { return Modulus(sign == Sign::Cyclic ? Sign::Negacyclic : Sign::Cyclic, n); }
  // x^n reduces to this scalar: +1 cyclic, -1 negacyclic.
  int64_t wrap(const PrimeField& F) const { return sign == Sign::Cyclic ? 1 : F.p() - 1; }
  FpPoly poly(const PrimeField& F) const;
};

// Element of R[x]/<x^n -+ 1>: f0 + u f1 + v f2 + uv f3, each component kept
// reduced to degree < n.
class RPoly {
public:
  RPoly(PrimeField field, Modulus mod);
  RPoly(PrimeField field, Modulus mod, std::array<FpPoly, 4> comps);

  static RPoly from_component(PrimeField field, Modulus mod, size_t k, FpPoly f);

  const PrimeField& field() const { return field_; }
  const Modulus& modulus() const { return mod_; }
  const FpPoly& comp(size_t k) const { return comps_[k]; }

  bool is_zero() const;
  RElem coeff(size_t i) const;
  FpPoly residue() const { return comps_[0]; }
  bool is_regular() const { return !comps_[0].is_zero(); }

  // Coefficient vector of length 4n, position-major: index 4*pos + component.
  std::vector<int64_t> to_vector() const;
  static RPoly from_vector(PrimeField field, Modulus mod, const std::vector<int64_t>& v);

  bool operator==(const RPoly& o) const;
  bool operator!=(const RPoly& o) const { return !(*this == o); }

private:
  PrimeField field_;
  Modulus mod_;
  std::array<FpPoly, 4> comps_;
};

RPoly operator+(const RPoly& f, const RPoly& g);
RPoly operator-(const RPoly& f, const RPoly& g);
RPoly operator*(const RPoly& f, const RPoly& g);
RPoly operator*(const FpPoly& s, const RPoly& f);
RPoly operator*(int64_t s, const RPoly& f);

// f(x) -> f(-x); flips the modulus sign. Requires odd n (enforced by Modulus).
RPoly phi(const RPoly& f);

struct RDivModResult {
  std::array<FpPoly, 4> quot;
  std::array<FpPoly, 4> rem;
};

// Division in R[x] by a regular g whose residue leads: components are divided
// triangularly by g[0]. Remainder components all have degree < deg g[0].
RDivModResult rpoly_divmod_components(const std::array<FpPoly, 4>& f,
                                      const std::array<FpPoly, 4>& g);

struct RPolyDivMod {
  RPoly quot;
  RPoly rem;
};

// Same division applied to reduced representatives (degree < n throughout).
RPolyDivMod rpoly_divmod_regular(const RPoly& f, const RPoly& g);

// Whether g divides x^n -+ 1 in R[x] (the modulus as an unreduced polynomial).
bool divides_ring_modulus(const RPoly& g);

} // namespace negaring
