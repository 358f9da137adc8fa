#include "negaring/fieldpoly.hpp"

#include <algorithm>

namespace negaring {

namespace {

bool is_odd_prime(int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

} // namespace

PrimeField::PrimeField(int64_t p) : p_(p) {
  if (!is_odd_prime(p)) {
    fail(errc::invalid_argument, "field characteristic must be an odd prime, got " + std::to_string(p));
  }
}

int64_t PrimeField::inv(int64_t a) const {
  a = reduce(a);
  if (a == 0) fail(errc::not_invertible, "zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

int64_t PrimeField::pow(int64_t a, int64_t e) const {
  a = reduce(a);
  int64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

FpPoly::FpPoly(PrimeField field, std::vector<int64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::monomial(PrimeField field, size_t deg, int64_t coeff) {
  std::vector<int64_t> c(deg + 1, 0);
  c[deg] = coeff;
  return FpPoly(field, std::move(c));
}

int64_t FpPoly::lead() const {
  if (coeffs_.empty()) fail(errc::division_by_zero, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return field_.inv(lead()) * *this;
}

bool FpPoly::operator==(const FpPoly& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

namespace {

void check_fields(const FpPoly& a, const FpPoly& b) {
  if (a.field() != b.field()) {
    fail(errc::field_mismatch, "polynomials over different fields");
  }
}

} // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  check_fields(a, b);
  std::vector<int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.field().add(a.coeff(i), b.coeff(i));
  return FpPoly(a.field(), std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  check_fields(a, b);
  std::vector<int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.field().sub(a.coeff(i), b.coeff(i));
  return FpPoly(a.field(), std::move(c));
}

FpPoly operator-(const FpPoly& a) { return -1 * a; }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_fields(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.field());
  std::vector<int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = a.field().add(c[i + j], a.field().mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return FpPoly(a.field(), std::move(c));
}

FpPoly operator*(int64_t s, const FpPoly& a) {
  std::vector<int64_t> c = a.coeffs();
  int64_t sr = a.field().reduce(s);
  for (auto& x : c) x = a.field().mul(sr, x);
  return FpPoly(a.field(), std::move(c));
}

DivModResult poly_divmod(const FpPoly& f, const FpPoly& g) {
  check_fields(f, g);
  if (g.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  const PrimeField& F = f.field();
  size_t dg = *g.degree();
  std::vector<int64_t> rem = f.coeffs();
  if (rem.size() < dg + 1) {
    return {FpPoly(F), f};
  }
  std::vector<int64_t> quot(rem.size() - dg, 0);
  int64_t lg_inv = F.inv(g.lead());
  for (size_t i = rem.size(); i-- > dg;) {
    if (rem[i] == 0) continue;
    int64_t q = F.mul(rem[i], lg_inv);
    quot[i - dg] = q;
    for (size_t j = 0; j <= dg; ++j) {
      rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(q, g.coeff(j)));
    }
  }
  return {FpPoly(F, std::move(quot)), FpPoly(F, std::move(rem))};
}

bool divides(const FpPoly& g, const FpPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return poly_divmod(f, g).rem.is_zero();
}

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
  check_fields(a, b);
  if (a.is_zero() && b.is_zero()) fail(errc::undefined_gcd, "gcd(0, 0) is undefined");
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = poly_divmod(x, y).rem;
    x = y;
    y = r;
  }
  return x.monic();
}

FpPoly poly_pow(const FpPoly& f, uint64_t e) {
  FpPoly acc(f.field(), {1});
  FpPoly base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FpPoly poly_powmod(const FpPoly& f, uint64_t e, const FpPoly& m) {
  FpPoly acc(f.field(), {1});
  FpPoly base = poly_divmod(f, m).rem;
  while (e > 0) {
    if (e & 1) acc = poly_divmod(acc * base, m).rem;
    base = poly_divmod(base * base, m).rem;
    e >>= 1;
  }
  return acc;
}

std::vector<FpPoly> monic_divisors(const FpPoly& m, uint64_t budget) {
  if (m.is_zero()) fail(errc::invalid_argument, "divisor enumeration needs a nonzero modulus");
  const PrimeField& F = m.field();
  size_t D = *m.degree();
  uint64_t p = static_cast<uint64_t>(F.p());

  uint64_t candidates = 0;
  uint64_t pow_d = 1;
  for (size_t d = 0; d < D; ++d) {
    if (pow_d > budget - candidates) {
      fail(errc::budget_exceeded, "monic divisor enumeration over budget");
    }
    candidates += pow_d;
    if (d + 1 < D) {
      if (pow_d > budget / p) {
        fail(errc::budget_exceeded, "monic divisor enumeration over budget");
      }
      pow_d *= p;
    }
  }

  std::vector<FpPoly> out;
  for (size_t d = 0; d < D; ++d) {
    std::vector<int64_t> c(d + 1, 0);
    c[d] = 1;
    // Odometer over the d free coefficients below the leading 1.
    while (true) {
      FpPoly cand(F, c);
      if (divides(cand, m)) out.push_back(cand);
      size_t i = 0;
      while (i < d && c[i] == F.p() - 1) {
        c[i] = 0;
        ++i;
      }
      if (i == d) break;
      ++c[i];
    }
  }
  out.push_back(m.monic());

  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

} // namespace negaring
