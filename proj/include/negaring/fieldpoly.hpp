#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negaring/errors.hpp"

namespace negaring {

// Prime field F_p for an odd prime p. Elements are canonical residues in [0, p).
class PrimeField {
public:
  explicit PrimeField(int64_t p);

  int64_t p() const { return p_; }

  int64_t reduce(int64_t v) const {
    int64_t r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  int64_t add(int64_t a, int64_t b) const { return (a + b) % p_; }
  int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p_; }
  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }
  int64_t inv(int64_t a) const;
  int64_t pow(int64_t a, int64_t e) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  int64_t p_;
};

// Dense polynomial over F_p. Coefficients ascending; invariant: no trailing
// zeros, so the zero polynomial is the empty vector and degree() is nullopt.
class FpPoly {
public:
  explicit FpPoly(PrimeField field, std::vector<int64_t> coeffs = {});

  static FpPoly monomial(PrimeField field, size_t deg, int64_t coeff = 1);

  const PrimeField& field() const { return field_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  int64_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  int64_t lead() const;

  FpPoly monic() const;

  bool operator==(const FpPoly& o) const;
  bool operator!=(const FpPoly& o) const { return !(*this == o); }

private:
  PrimeField field_;
  std::vector<int64_t> coeffs_;
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a);
FpPoly operator*(const FpPoly& a, const FpPoly& b);
FpPoly operator*(int64_t s, const FpPoly& a);

struct DivModResult {
  FpPoly quot;
  FpPoly rem;
};

// Long division: f = quot*g + rem with deg rem < deg g. g must be nonzero.
DivModResult poly_divmod(const FpPoly& f, const FpPoly& g);

bool divides(const FpPoly& g, const FpPoly& f);

// Monic gcd. gcd(f, 0) = monic(f); gcd(0, 0) is undefined.
FpPoly poly_gcd(const FpPoly& a, const FpPoly& b);

FpPoly poly_pow(const FpPoly& f, uint64_t e);
FpPoly poly_powmod(const FpPoly& f, uint64_t e, const FpPoly& m);

// All monic divisors of m (m nonzero), sorted by degree then by coefficient
// vector. Candidate count below deg(m) is capped by `budget`.
std::vector<FpPoly> monic_divisors(const FpPoly& m, uint64_t budget = 1000000);

} // namespace negaring
