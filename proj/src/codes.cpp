#include "negaring/codes.hpp"

#include <algorithm>
#include <utility>

#include "negaring/errors.hpp"
#include "negaring/parse.hpp"

namespace negaring {

namespace {

// layer 0: w, 1: u*w, 2: v*w, 3: uv*w
RPoly layer_mult(const RPoly& w, int layer) {
  const PrimeField& F = w.field();
  const Modulus& mod = w.modulus();
  FpPoly zero(F);
  switch (layer) {
    case 0: return w;
    case 1: return RPoly(F, mod, {zero, w.comp(0), zero, w.comp(2)});
    case 2: return RPoly(F, mod, {zero, zero, w.comp(0), w.comp(1)});
    default: return RPoly(F, mod, {zero, zero, zero, w.comp(0)});
  }
}

Row comp_major_row(const RPoly& w) {
  size_t n = w.modulus().n;
  Row row(4 * n, 0);
  for (size_t k = 0; k < 4; ++k) {
    const FpPoly& c = w.comp(k);
    for (size_t i = 0; i < n; ++i) row[k * n + i] = c.coeff(i);
  }
  return row;
}

void close_into(EchelonBasis& basis, const PrimeField& field, const Modulus& mod,
                const std::vector<RPoly>& gens, bool comp_major) {
  FpPoly x = FpPoly::monomial(field, 1);
  for (const auto& g : gens) {
    if (!(g.field() == field)) fail(errc::field_mismatch, "closure: generator field differs");
    if (!(g.modulus() == mod)) fail(errc::modulus_mismatch, "closure: generator modulus differs");
    for (int layer = 0; layer < 4; ++layer) {
      RPoly w = layer_mult(g, layer);
      for (size_t i = 0; i < mod.n; ++i) {
        basis.add(comp_major ? comp_major_row(w) : w.to_vector());
        w = x * w;
      }
    }
  }
}

FpPoly block_slice(const PrimeField& field, const Row& row, size_t block, size_t n) {
  std::vector<int64_t> c(row.begin() + static_cast<std::ptrdiff_t>(block * n),
                         row.begin() + static_cast<std::ptrdiff_t>((block + 1) * n));
  return FpPoly(field, c);
}

// Reduced quotient of two polynomials; denominator kept monic, zero has
// denominator one. Exact divisibility claims demand a polynomial value.
class FpFraction {
public:
  static FpFraction of(const FpPoly& f) { return FpFraction(f, FpPoly(f.field(), {1})); }

  FpFraction(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }

  bool is_poly() const { return den_.degree() && *den_.degree() == 0; }

  bool divisible_by(const FpPoly& g) const { return is_poly() && divides(g, num_); }

  std::string str() const {
    if (is_poly()) return to_string(num_);
    return "(" + to_string(num_) + ")/(" + to_string(den_) + ")";
  }

  friend FpFraction operator+(const FpFraction& a, const FpFraction& b) {
    return FpFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FpFraction operator-(const FpFraction& a, const FpFraction& b) {
    return FpFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend FpFraction operator*(const FpFraction& a, const FpFraction& b) {
    return FpFraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend FpFraction operator/(const FpFraction& a, const FpFraction& b) {
    if (b.num_.is_zero()) fail(errc::division_by_zero, "fraction divided by zero");
    return FpFraction(a.num_ * b.den_, a.den_ * b.num_);
  }

private:
  void normalize() {
    const PrimeField& F = num_.field();
    if (den_.is_zero()) fail(errc::division_by_zero, "fraction with zero denominator");
    if (num_.is_zero()) {
      den_ = FpPoly(F, {1});
      return;
    }
    FpPoly g = poly_gcd(num_, den_);
    num_ = poly_divmod(num_, g).quot;
    den_ = poly_divmod(den_, g).quot;
    int64_t scale = F.inv(den_.lead());
    num_ = scale * num_;
    den_ = scale * den_;
  }

  FpPoly num_;
  FpPoly den_;
};

} // namespace

EchelonBasis fp_closure(const PrimeField& field, const Modulus& mod,
                        const std::vector<RPoly>& gens) {
  EchelonBasis basis(field, 4 * mod.n);
  close_into(basis, field, mod, gens, false);
  return basis;
}

EchelonBasis r_span(const PrimeField& field, const Modulus& mod,
                    const std::vector<RPoly>& elements) {
  EchelonBasis basis(field, 4 * mod.n);
  for (const auto& e : elements) {
    for (int layer = 0; layer < 4; ++layer) basis.add(layer_mult(e, layer).to_vector());
  }
  return basis;
}

NegacyclicCode::NegacyclicCode(PrimeField field, Modulus mod)
    : field_(field),
      mod_(mod),
      g_{FpPoly(field), FpPoly(field), FpPoly(field), FpPoly(field)},
      coef_{FpPoly(field), FpPoly(field), FpPoly(field),
            FpPoly(field), FpPoly(field), FpPoly(field)},
      basis_(field, 4 * mod.n) {}

NegacyclicCode NegacyclicCode::from_generators(PrimeField field, Modulus mod,
                                               const std::vector<RPoly>& gens) {
  NegacyclicCode code(field, mod);
  const size_t n = mod.n;
  const FpPoly M = mod.poly(field);

  EchelonBasis comp(field, 4 * n);
  close_into(comp, field, mod, gens, true);

  // Torsion generator of each layer: gcd of the pivot-block slices.
  std::array<FpPoly, 4> g = {M, M, M, M};
  std::array<std::vector<size_t>, 4> block_rows;
  const auto& rows = comp.rows();
  const auto& pivots = comp.pivots();
  for (size_t r = 0; r < rows.size(); ++r) {
    size_t k = pivots[r] / n;
    block_rows[k].push_back(r);
    g[k] = poly_gcd(g[k], block_slice(field, rows[r], k, n));
  }

  auto chain = [&](const FpPoly& lo, const FpPoly& hi, const char* what) {
    if (!divides(lo, hi)) fail(errc::internal_invariant, std::string("torsion chain broken: ") + what);
  };
  chain(g[0], M, "g1 | modulus");
  chain(g[1], g[0], "g2 | g1");
  chain(g[2], g[0], "g3 | g1");
  chain(g[3], g[1], "g4 | g2");
  chain(g[3], g[2], "g4 | g3");

  // Lift each torsion generator: coefficients against the reduced echelon
  // rows are read off g's own coordinates at the pivot positions, which picks
  // the unique element of the code supported on this block's rows.
  std::array<RPoly, 4> A = {RPoly(field, mod), RPoly(field, mod), RPoly(field, mod),
                            RPoly(field, mod)};
  for (size_t k = 0; k < 4; ++k) {
    if (g[k] == M) continue;
    Row acc(4 * n, 0);
    for (size_t r : block_rows[k]) {
      int64_t lambda = g[k].coeff(pivots[r] - k * n);
      if (lambda == 0) continue;
      for (size_t c = 0; c < 4 * n; ++c) acc[c] = field.add(acc[c], field.mul(lambda, rows[r][c]));
    }
    std::array<FpPoly, 4> comps = {block_slice(field, acc, 0, n), block_slice(field, acc, 1, n),
                                   block_slice(field, acc, 2, n), block_slice(field, acc, 3, n)};
    for (size_t b = 0; b < k; ++b) {
      if (!comps[b].is_zero()) fail(errc::internal_invariant, "lift has support below its block");
    }
    if (!(comps[k] == g[k])) fail(errc::internal_invariant, "lift does not reproduce its torsion generator");
    A[k] = RPoly(field, mod, comps);
  }

  // Tail reduction, lowest layer first. A quotient against an absent layer is
  // zero (every tail already has degree below n), so absence needs no branch.
  auto reduce_tail = [&](RPoly& a, size_t part, const FpPoly& lower_g, const RPoly& lower_A) {
    FpPoly q = poly_divmod(a.comp(part), lower_g).quot;
    if (!q.is_zero()) a = a - q * lower_A;
  };
  if (!A[2].is_zero()) {
    reduce_tail(A[2], 3, g[3], A[3]);
  }
  if (!A[1].is_zero()) {
    reduce_tail(A[1], 2, g[2], A[2]);
    reduce_tail(A[1], 3, g[3], A[3]);
  }
  if (!A[0].is_zero()) {
    reduce_tail(A[0], 1, g[1], A[1]);
    reduce_tail(A[0], 2, g[2], A[2]);
    reduce_tail(A[0], 3, g[3], A[3]);
  }

  code.g_ = g;
  code.coef_ = {A[0].comp(1), A[0].comp(2), A[0].comp(3),
                A[1].comp(2), A[1].comp(3), A[2].comp(3)};

  // Tail degree bounds: g_ij is zero or deg g_ij < deg g_{j+1}.
  const std::array<std::pair<size_t, size_t>, 6> bound = {
      {{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 3}, {5, 3}}};
  for (auto [idx, gi] : bound) {
    const FpPoly& t = code.coef_[idx];
    if (!t.is_zero() && *t.degree() >= *g[gi].degree()) {
      fail(errc::internal_invariant, "tail degree bound violated");
    }
  }

  code.basis_ = fp_closure(field, mod, gens);
  std::vector<RPoly> canon;
  for (size_t k = 0; k < 4; ++k) {
    if (!A[k].is_zero()) canon.push_back(A[k]);
  }
  if (!(fp_closure(field, mod, canon) == code.basis_)) {
    fail(errc::internal_invariant, "canonical generators span a different code");
  }
  size_t expect = 0;
  for (size_t k = 0; k < 4; ++k) expect += n - *g[k].degree();
  if (code.basis_.dim() != expect) {
    fail(errc::internal_invariant, "dimension disagrees with torsion degrees");
  }
  return code;
}

const FpPoly& NegacyclicCode::g(size_t i) const {
  if (i < 1 || i > 4) fail(errc::out_of_range, "torsion index must be 1..4");
  return g_[i - 1];
}

const FpPoly& NegacyclicCode::gij(size_t i, size_t j) const {
  if (i == 1 && j >= 1 && j <= 3) return coef_[j - 1];
  if (i == 2 && (j == 2 || j == 3)) return coef_[j + 1];
  if (i == 3 && j == 3) return coef_[5];
  fail(errc::out_of_range, "tail index must be one of 11 12 13 22 23 33");
}

size_t NegacyclicCode::r(size_t i) const { return *g(i).degree(); }

RPoly NegacyclicCode::A(size_t i) const {
  FpPoly zero(field_);
  switch (i) {
    case 1: return RPoly(field_, mod_, {g_[0], coef_[0], coef_[1], coef_[2]});
    case 2: return RPoly(field_, mod_, {zero, g_[1], coef_[3], coef_[4]});
    case 3: return RPoly(field_, mod_, {zero, zero, g_[2], coef_[5]});
    case 4: return RPoly(field_, mod_, {zero, zero, zero, g_[3]});
    default: fail(errc::out_of_range, "generator index must be 1..4");
  }
}

std::vector<RPoly> NegacyclicCode::generators() const {
  std::vector<RPoly> out;
  for (size_t i = 1; i <= 4; ++i) {
    RPoly a = A(i);
    if (!a.is_zero()) out.push_back(a);
  }
  return out;
}

RPoly NegacyclicCode::free_generator() const {
  if (!is_free()) fail(errc::not_free, "code is not free over the coefficient ring");
  return A(1);
}

SpanningSet NegacyclicCode::spanning_set() const {
  SpanningSet s;
  s.rank = rank();
  s.free_rank = free_rank();
  const std::array<size_t, 4> count = {n() - r(1), r(1) - r(2), r(1) - r(3),
                                       r_prime() - r(4)};
  FpPoly x = FpPoly::monomial(field_, 1);
  for (size_t i = 0; i < 4; ++i) {
    if (count[i] == 0) continue;
    RPoly cur = A(i + 1);
    for (size_t t = 0; t < count[i]; ++t) {
      s.elements.push_back(cur);
      cur = x * cur;
    }
  }
  if (s.elements.size() != s.rank) fail(errc::internal_invariant, "spanning set size differs from rank");
  return s;
}

PropertyReport NegacyclicCode::verify_structure() const {
  return verify_structure_tuple(field_, mod_, g_, coef_);
}

CoprimeForm NegacyclicCode::coprime_form() const {
  if (mod_.n % static_cast<size_t>(field_.p()) == 0) {
    fail(errc::not_coprime, "length shares a factor with the characteristic");
  }
  FpPoly zero(field_);
  RPoly gen1(field_, mod_, {g_[0], g_[1], zero, zero});
  RPoly gen2(field_, mod_, {zero, zero, g_[2], g_[3]});
  std::vector<RPoly> gens;
  if (!gen1.is_zero()) gens.push_back(gen1);
  if (!gen2.is_zero()) gens.push_back(gen2);
  bool matches = fp_closure(field_, mod_, gens) == basis_;
  return {gen1, gen2, matches};
}

std::vector<RPoly> NegacyclicCode::cyclic_counterpart() const {
  std::vector<RPoly> out;
  for (const auto& a : generators()) out.push_back(phi(a));
  return out;
}

bool NegacyclicCode::operator==(const NegacyclicCode& o) const {
  return field_ == o.field_ && mod_ == o.mod_ && g_ == o.g_ && coef_ == o.coef_;
}

PropertyReport verify_structure_tuple(const PrimeField& field, const Modulus& mod,
                                      const std::array<FpPoly, 4>& g,
                                      const std::array<FpPoly, 6>& coef) {
  const FpPoly M = mod.poly(field);
  const FpPoly &g1 = g[0], &g2 = g[1], &g3 = g[2], &g4 = g[3];
  const FpPoly &g11 = coef[0], &g12 = coef[1], &g13 = coef[2];
  const FpPoly &g22 = coef[3], &g23 = coef[4], &g33 = coef[5];
  for (const auto& d : g) {
    if (d.is_zero()) fail(errc::invalid_argument, "torsion generators must be nonzero");
  }

  auto fr = [](const FpPoly& f) { return FpFraction::of(f); };
  auto claim = [](const FpFraction& t, const FpPoly& d, const std::string& label) {
    PropertyCheck c;
    c.ok = t.divisible_by(d);
    if (!c.ok) c.witness = label + ": " + t.str() + " is not a multiple of " + to_string(d);
    return c;
  };

  PropertyReport rep;

  { // (1) divisibility chains
    struct ChainClaim {
      const FpPoly* lo;
      const FpPoly* hi;
      const char* label;
    };
    const ChainClaim chains[] = {{&g4, &g3, "g4 | g3"}, {&g3, &g1, "g3 | g1"},
                                 {&g4, &g2, "g4 | g2"}, {&g2, &g1, "g2 | g1"},
                                 {&g1, &M, "g1 | modulus"}};
    PropertyCheck c;
    c.ok = true;
    for (const auto& ch : chains) {
      if (!divides(*ch.lo, *ch.hi)) {
        c.ok = false;
        if (!c.witness.empty()) c.witness += "; ";
        c.witness += ch.label;
      }
    }
    rep.checks[0] = c;
  }

  { // (2) g_{i+1} | (M/g_i) g_ii
    const FpPoly* diag[] = {&g11, &g22, &g33};
    const FpPoly* lower[] = {&g2, &g3, &g4};
    const FpPoly* upper[] = {&g1, &g2, &g3};
    PropertyCheck c;
    c.ok = true;
    for (int i = 0; i < 3; ++i) {
      PropertyCheck one = claim(fr(M) / fr(*upper[i]) * fr(*diag[i]), *lower[i],
                                "(M/g" + std::to_string(i + 1) + ")*g" +
                                    std::to_string(i + 1) + std::to_string(i + 1));
      if (!one.ok) {
        c.ok = false;
        if (!c.witness.empty()) c.witness += "; ";
        c.witness += one.witness;
      }
    }
    rep.checks[1] = c;
  }

  rep.checks[2] = claim(fr(g1) / fr(g2) * fr(g22), g3, "(g1/g2)*g22");

  { // (4) g4 | g22
    PropertyCheck c;
    c.ok = divides(g4, g22);
    if (!c.ok) c.witness = "g22 = " + to_string(g22) + " is not a multiple of " + to_string(g4);
    rep.checks[3] = c;
  }

  rep.checks[4] = claim(fr(g11) - fr(g1) / fr(g3) * fr(g33), g4, "g11 - (g1/g3)*g33");
  rep.checks[5] = claim(fr(g12) - fr(g1) / fr(g2) * fr(g23) +
                            fr(g1) / (fr(g2) * fr(g3)) * fr(g22) * fr(g33),
                        g4, "g12 - (g1/g2)*g23 + (g1/(g2*g3))*g22*g33");

  { // (7) eliminated tails, evaluated as exact quotients
    FpFraction s11 = fr(g11);
    FpFraction s22 = fr(g22);
    FpFraction s12 = fr(g12) - s11 / fr(g2) * fr(g22);
    FpFraction s13 = fr(g13) - s11 / fr(g2) * fr(g23) - s12 / fr(g3) * fr(g33);
    FpFraction s23 = fr(g23) - s22 / fr(g3) * fr(g33);
    rep.s_polys = {"s11 = " + s11.str(), "s12 = " + s12.str(), "s13 = " + s13.str(),
                   "s22 = " + s22.str(), "s23 = " + s23.str()};
    PropertyCheck parts[] = {claim(fr(M) / fr(g1) * s12, g3, "(M/g1)*s12"),
                             claim(fr(M) / fr(g1) * s13, g4, "(M/g1)*s13"),
                             claim(fr(M) / fr(g2) * s23, g4, "(M/g2)*s23")};
    PropertyCheck c;
    c.ok = true;
    for (const auto& one : parts) {
      if (!one.ok) {
        c.ok = false;
        if (!c.witness.empty()) c.witness += "; ";
        c.witness += one.witness;
      }
    }
    rep.checks[6] = c;
  }

  return rep;
}

} // namespace negaring
