#include "negaring/ring.hpp"

#include <algorithm>

namespace negaring {

RElem r_add(const PrimeField& F, const RElem& x, const RElem& y) {
  return {F.add(x.a, y.a), F.add(x.b, y.b), F.add(x.c, y.c), F.add(x.d, y.d)};
}

RElem r_sub(const PrimeField& F, const RElem& x, const RElem& y) {
  return {F.sub(x.a, y.a), F.sub(x.b, y.b), F.sub(x.c, y.c), F.sub(x.d, y.d)};
}

RElem r_mul(const PrimeField& F, const RElem& x, const RElem& y) {
  int64_t a = F.mul(x.a, y.a);
  int64_t b = F.add(F.mul(x.a, y.b), F.mul(x.b, y.a));
  int64_t c = F.add(F.mul(x.a, y.c), F.mul(x.c, y.a));
  int64_t d = F.add(F.add(F.mul(x.a, y.d), F.mul(x.d, y.a)),
                    F.add(F.mul(x.b, y.c), F.mul(x.c, y.b)));
  return {a, b, c, d};
}

IdealClass r_classify(const PrimeField& F, const RElem& x) {
  if (x.a != 0) return {IdealTag::Unit};
  if (x.b != 0 && x.c != 0) return {IdealTag::UPlusAlphaV, F.mul(x.c, F.inv(x.b))};
  if (x.b != 0) return {IdealTag::U};
  if (x.c != 0) return {IdealTag::V};
  if (x.d != 0) return {IdealTag::UV};
  return {IdealTag::Zero};
}

IdealClass ideal_classify(const PrimeField& F, const std::vector<RElem>& gens) {
  // The ideal is the F_p-span of {g, ug, vg, uvg}; as a subspace of F_p^4 it
  // is determined by which of the eight ideal shapes it spans.
  for (const auto& g : gens) {
    if (g.a != 0) return {IdealTag::Unit};
  }
  bool has_u = false, has_v = false, has_uv = false;
  int64_t alpha = -1;
  bool alpha_consistent = true;
  for (const auto& g : gens) {
    if (g.b != 0 && g.c != 0) {
      int64_t a = F.mul(g.c, F.inv(g.b));
      if (alpha == -1) alpha = a;
      else if (alpha != a) alpha_consistent = false;
      has_uv = true;
    } else if (g.b != 0) {
      has_u = true;
      has_uv = true;
    } else if (g.c != 0) {
      has_v = true;
      has_uv = true;
    } else if (g.d != 0) {
      has_uv = true;
    }
  }
  bool has_slope = alpha != -1;
  if (has_u && (has_v || has_slope)) return {IdealTag::MaximalUV};
  if (has_v && has_slope) return {IdealTag::MaximalUV};
  if (has_slope && !alpha_consistent) return {IdealTag::MaximalUV};
  if (has_u) return {IdealTag::U};
  if (has_v) return {IdealTag::V};
  if (has_slope) return {IdealTag::UPlusAlphaV, alpha};
  if (has_uv) return {IdealTag::UV};
  return {IdealTag::Zero};
}

Modulus::Modulus(Sign s, size_t length) : sign(s), n(length) {
  if (n == 0 || n % 2 == 0) {
    fail(errc::odd_length_required, "code length must be odd, got " + std::to_string(n));
  }
}

FpPoly Modulus::poly(const PrimeField& F) const {
  std::vector<int64_t> c(n + 1, 0);
  c[0] = sign == Sign::Cyclic ? F.p() - 1 : 1;
  c[n] = 1;
  return FpPoly(F, std::move(c));
}

namespace {

// Reduce a raw product mod x^n -+ 1: x^(n+i) wraps to sign * x^i.
FpPoly fold(const PrimeField& F, const Modulus& mod, const FpPoly& raw) {
  if (raw.coeffs().size() <= mod.n) return raw;
  std::vector<int64_t> c(mod.n, 0);
  int64_t w = mod.wrap(F);
  int64_t scale = 1;
  const auto& rc = raw.coeffs();
  for (size_t base = 0; base < rc.size(); base += mod.n) {
    for (size_t i = 0; i < mod.n && base + i < rc.size(); ++i) {
      c[i] = F.add(c[i], F.mul(scale, rc[base + i]));
    }
    scale = F.mul(scale, w);
  }
  return FpPoly(F, std::move(c));
}

} // namespace

RPoly::RPoly(PrimeField field, Modulus mod)
    : field_(field), mod_(mod),
      comps_{FpPoly(field), FpPoly(field), FpPoly(field), FpPoly(field)} {}

RPoly::RPoly(PrimeField field, Modulus mod, std::array<FpPoly, 4> comps)
    : field_(field), mod_(mod),
      comps_{fold(field, mod, comps[0]), fold(field, mod, comps[1]),
             fold(field, mod, comps[2]), fold(field, mod, comps[3])} {
  for (const auto& f : comps_) {
    if (f.field() != field_) fail(errc::field_mismatch, "component field differs from ring field");
  }
}

RPoly RPoly::from_component(PrimeField field, Modulus mod, size_t k, FpPoly f) {
  std::array<FpPoly, 4> comps{FpPoly(field), FpPoly(field), FpPoly(field), FpPoly(field)};
  comps[k] = std::move(f);
  return RPoly(field, mod, std::move(comps));
}

bool RPoly::is_zero() const {
  return comps_[0].is_zero() && comps_[1].is_zero() && comps_[2].is_zero() && comps_[3].is_zero();
}

RElem RPoly::coeff(size_t i) const {
  return {comps_[0].coeff(i), comps_[1].coeff(i), comps_[2].coeff(i), comps_[3].coeff(i)};
}

std::vector<int64_t> RPoly::to_vector() const {
  std::vector<int64_t> v(4 * mod_.n, 0);
  for (size_t pos = 0; pos < mod_.n; ++pos) {
    for (size_t k = 0; k < 4; ++k) v[4 * pos + k] = comps_[k].coeff(pos);
  }
  return v;
}

RPoly RPoly::from_vector(PrimeField field, Modulus mod, const std::vector<int64_t>& v) {
  std::array<FpPoly, 4> comps{FpPoly(field), FpPoly(field), FpPoly(field), FpPoly(field)};
  for (size_t k = 0; k < 4; ++k) {
    std::vector<int64_t> c(mod.n, 0);
    for (size_t pos = 0; pos < mod.n; ++pos) c[pos] = v.at(4 * pos + k);
    comps[k] = FpPoly(field, std::move(c));
  }
  return RPoly(field, mod, std::move(comps));
}

bool RPoly::operator==(const RPoly& o) const {
  return field_ == o.field_ && mod_ == o.mod_ && comps_ == o.comps_;
}

namespace {

void check_context(const RPoly& f, const RPoly& g) {
  if (f.field() != g.field()) fail(errc::field_mismatch, "ring elements over different fields");
  if (f.modulus() != g.modulus()) fail(errc::modulus_mismatch, "ring elements over different moduli");
}

} // namespace

RPoly operator+(const RPoly& f, const RPoly& g) {
  check_context(f, g);
  return RPoly(f.field(), f.modulus(),
               {f.comp(0) + g.comp(0), f.comp(1) + g.comp(1), f.comp(2) + g.comp(2), f.comp(3) + g.comp(3)});
}

RPoly operator-(const RPoly& f, const RPoly& g) {
  check_context(f, g);
  return RPoly(f.field(), f.modulus(),
               {f.comp(0) - g.comp(0), f.comp(1) - g.comp(1), f.comp(2) - g.comp(2), f.comp(3) - g.comp(3)});
}

RPoly operator*(const RPoly& f, const RPoly& g) {
  check_context(f, g);
  // Same shape as r_mul with polynomial components.
  FpPoly h0 = f.comp(0) * g.comp(0);
  FpPoly h1 = f.comp(0) * g.comp(1) + f.comp(1) * g.comp(0);
  FpPoly h2 = f.comp(0) * g.comp(2) + f.comp(2) * g.comp(0);
  FpPoly h3 = f.comp(0) * g.comp(3) + f.comp(3) * g.comp(0) +
              f.comp(1) * g.comp(2) + f.comp(2) * g.comp(1);
  return RPoly(f.field(), f.modulus(), {std::move(h0), std::move(h1), std::move(h2), std::move(h3)});
}

RPoly operator*(const FpPoly& s, const RPoly& f) {
  return RPoly(f.field(), f.modulus(), {s * f.comp(0), s * f.comp(1), s * f.comp(2), s * f.comp(3)});
}

RPoly operator*(int64_t s, const RPoly& f) {
  return RPoly(f.field(), f.modulus(), {s * f.comp(0), s * f.comp(1), s * f.comp(2), s * f.comp(3)});
}

RPoly phi(const RPoly& f) {
  const PrimeField& F = f.field();
  std::array<FpPoly, 4> out{FpPoly(F), FpPoly(F), FpPoly(F), FpPoly(F)};
  for (size_t k = 0; k < 4; ++k) {
    std::vector<int64_t> c = f.comp(k).coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = F.neg(c[i]);
    out[k] = FpPoly(F, std::move(c));
  }
  return RPoly(F, f.modulus().flipped(), std::move(out));
}

RDivModResult rpoly_divmod_components(const std::array<FpPoly, 4>& f,
                                      const std::array<FpPoly, 4>& g) {
  if (g[0].is_zero()) {
    fail(errc::not_regular, "division requires a regular divisor (nonzero residue)");
  }
  auto d0 = poly_divmod(f[0], g[0]);
  auto d1 = poly_divmod(f[1] - d0.quot * g[1], g[0]);
  auto d2 = poly_divmod(f[2] - d0.quot * g[2], g[0]);
  auto d3 = poly_divmod(f[3] - d0.quot * g[3] - d1.quot * g[2] - d2.quot * g[1], g[0]);
  return {{d0.quot, d1.quot, d2.quot, d3.quot}, {d0.rem, d1.rem, d2.rem, d3.rem}};
}

RPolyDivMod rpoly_divmod_regular(const RPoly& f, const RPoly& g) {
  check_context(f, g);
  auto r = rpoly_divmod_components({f.comp(0), f.comp(1), f.comp(2), f.comp(3)},
                                   {g.comp(0), g.comp(1), g.comp(2), g.comp(3)});
  return {RPoly(f.field(), f.modulus(), r.quot), RPoly(f.field(), f.modulus(), r.rem)};
}

bool divides_ring_modulus(const RPoly& g) {
  const PrimeField& F = g.field();
  std::array<FpPoly, 4> target{g.modulus().poly(F), FpPoly(F), FpPoly(F), FpPoly(F)};
  auto r = rpoly_divmod_components(target, {g.comp(0), g.comp(1), g.comp(2), g.comp(3)});
  return r.rem[0].is_zero() && r.rem[1].is_zero() && r.rem[2].is_zero() && r.rem[3].is_zero();
}

} // namespace negaring
