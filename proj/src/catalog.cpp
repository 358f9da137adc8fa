#include "negaring/catalog.hpp"

#include <algorithm>
#include <map>

#include "negaring/errors.hpp"
#include "negaring/parse.hpp"
#include "negaring/sampling.hpp"

namespace negaring {

namespace {

using C6 = std::array<int64_t, 6>;

FpPoly gp(const PrimeField& F, size_t t) { return poly_pow(FpPoly(F, {1, 1}), t); }

RPoly quad(const PrimeField& F, const Modulus& m, const FpPoly& a, const FpPoly& b,
           const FpPoly& c, const FpPoly& d) {
  return RPoly(F, m, {a, b, c, d});
}

std::string canonical_key(const NegacyclicCode& code) {
  std::string key;
  for (size_t i = 1; i <= 4; ++i) key += to_string(code.g(i)) + "|";
  static const std::pair<size_t, size_t> ij[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [i, j] : ij) key += to_string(code.gij(i, j)) + "|";
  return key;
}

// Visit coefficient draws for a list of tail lengths: all of them when the
// space fits the cap, otherwise the zero draw plus seeded samples.
void for_each_draw(const PrimeField& F, const std::vector<size_t>& lens, uint64_t cap,
                   size_t samples, Rng& rng,
                   const std::function<void(const std::vector<FpPoly>&)>& fn) {
  size_t total = 0;
  for (size_t len : lens) total += len;
  const int64_t p = F.p();

  auto assemble = [&](const std::vector<int64_t>& flat) {
    std::vector<FpPoly> polys;
    size_t at = 0;
    for (size_t len : lens) {
      polys.emplace_back(F, std::vector<int64_t>(flat.begin() + static_cast<std::ptrdiff_t>(at),
                                                 flat.begin() + static_cast<std::ptrdiff_t>(at + len)));
      at += len;
    }
    return polys;
  };

  uint64_t space = 1;
  bool big = false;
  for (size_t i = 0; i < total; ++i) {
    if (space > cap / static_cast<uint64_t>(p)) {
      big = true;
      break;
    }
    space *= static_cast<uint64_t>(p);
  }

  std::vector<int64_t> flat(total, 0);
  if (!big && space <= cap) {
    while (true) {
      fn(assemble(flat));
      size_t i = 0;
      while (i < total && flat[i] == p - 1) flat[i++] = 0;
      if (i == total) break;
      ++flat[i];
    }
  } else {
    fn(assemble(flat));
    for (size_t s = 0; s < samples; ++s) {
      for (auto& v : flat) v = rng.fp(F);
      fn(assemble(flat));
    }
  }
}

void apply_constraint(RowConstraint k, C6& c, Rng* rng) {
  switch (k) {
    case RowConstraint::None:
      return;
    case RowConstraint::ProductZero01:
      c[rng ? rng->next(2) : 1] = 0;
      return;
    case RowConstraint::ProductZero02:
      c[rng ? 2 * rng->next(2) : 2] = 0;
      return;
    case RowConstraint::Eq01OrEq23:
      if (rng && rng->next(2)) {
        c[3] = c[2];
      } else {
        c[1] = c[0];
      }
      return;
  }
}

} // namespace

std::vector<FpPoly> modulus_divisors(const PrimeField& field, const Modulus& mod,
                                     uint64_t budget) {
  FpPoly M = mod.poly(field);
  FpPoly xp1(field, {1, 1});
  if (poly_pow(xp1, mod.n) == M) {
    std::vector<FpPoly> out;
    for (size_t t = 0; t <= mod.n; ++t) out.push_back(poly_pow(xp1, t));
    return out;
  }
  return monic_divisors(M, budget);
}

std::vector<Skeleton> enumerate_skeletons(const PrimeField& field, const Modulus& mod,
                                          uint64_t divisor_budget) {
  std::vector<FpPoly> divisors = modulus_divisors(field, mod, divisor_budget);
  std::vector<Skeleton> out;
  for (const auto& g1 : divisors) {
    for (const auto& g2 : divisors) {
      if (!divides(g2, g1)) continue;
      for (const auto& g3 : divisors) {
        if (!divides(g3, g1)) continue;
        for (const auto& g4 : divisors) {
          if (!divides(g4, g2) || !divides(g4, g3)) continue;
          out.push_back({{g1, g2, g3, g4}});
        }
      }
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog_codes(const PrimeField& field, const Modulus& mod,
                                        const CatalogOptions& opt) {
  if (opt.family != "all" && opt.family != "free" && opt.family != "single-nonfree" &&
      opt.family != "uv-only") {
    fail(errc::invalid_argument, "unknown family: " + opt.family);
  }
  const size_t n = mod.n;
  Rng rng(opt.seed);
  std::vector<FpPoly> divisors = modulus_divisors(field, mod, opt.divisor_budget);
  FpPoly zero(field);

  std::map<std::string, bool> seen;
  std::vector<CatalogEntry> entries;

  auto emit = [&](const std::vector<RPoly>& gens) {
    NegacyclicCode code = NegacyclicCode::from_generators(field, mod, gens);
    if (opt.family == "free" && (!code.is_free() || code.is_zero())) return;
    if (opt.family == "single-nonfree" && (code.is_free() || code.is_zero())) return;
    std::string key = canonical_key(code);
    if (!seen.emplace(key, true).second) return;
    DistanceReport dist = analyze_distance(code, opt.budgets);
    entries.push_back({code, dist, "enumerated"});
  };

  if (opt.family == "free") {
    for (const auto& d : divisors) {
      if (*d.degree() == n) continue;
      for_each_draw(field, {n, n, n}, opt.coeff_budget, opt.samples, rng,
                    [&](const std::vector<FpPoly>& tails) {
                      emit({quad(field, mod, d, tails[0], tails[1], tails[2])});
                    });
    }
  } else if (opt.family == "single-nonfree") {
    for (size_t layer = 1; layer < 4; ++layer) {
      for (const auto& d : divisors) {
        if (*d.degree() == n) continue;
        std::vector<size_t> lens(3 - layer, n);
        for_each_draw(field, lens, opt.coeff_budget, opt.samples, rng,
                      [&](const std::vector<FpPoly>& tails) {
                        std::array<FpPoly, 4> comps = {zero, zero, zero, zero};
                        comps[layer] = d;
                        for (size_t k = layer + 1; k < 4; ++k) comps[k] = tails[k - layer - 1];
                        emit({RPoly(field, mod, comps)});
                      });
      }
    }
  } else if (opt.family == "uv-only") {
    for (const auto& d : divisors) {
      size_t deg = *d.degree();
      if (deg == 0 || deg == n) continue;
      emit({quad(field, mod, zero, zero, zero, d)});
    }
  } else { // all: every skeleton with boundary and sampled tails
    for (const Skeleton& sk : enumerate_skeletons(field, mod, opt.divisor_budget)) {
      const size_t r1 = *sk.g[0].degree();
      const size_t r2 = *sk.g[1].degree();
      const size_t r3 = *sk.g[2].degree();
      const size_t r4 = *sk.g[3].degree();
      std::vector<size_t> lens;
      if (r1 < n) lens.insert(lens.end(), {r2, r3, r4});
      if (r2 < n) lens.insert(lens.end(), {r3, r4});
      if (r3 < n) lens.push_back(r4);
      for_each_draw(field, lens, opt.coeff_budget, opt.samples, rng,
                    [&](const std::vector<FpPoly>& tails) {
                      std::vector<RPoly> gens;
                      size_t at = 0;
                      if (r1 < n) {
                        gens.push_back(quad(field, mod, sk.g[0], tails[at], tails[at + 1], tails[at + 2]));
                        at += 3;
                      }
                      if (r2 < n) {
                        gens.push_back(quad(field, mod, zero, sk.g[1], tails[at], tails[at + 1]));
                        at += 2;
                      }
                      if (r3 < n) {
                        gens.push_back(quad(field, mod, zero, zero, sk.g[2], tails[at]));
                        at += 1;
                      }
                      if (r4 < n) gens.push_back(quad(field, mod, zero, zero, zero, sk.g[3]));
                      emit(gens);
                    });
    }
  }

  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    std::array<size_t, 4> ra = {a.code.r(1), a.code.r(2), a.code.r(3), a.code.r(4)};
    std::array<size_t, 4> rb = {b.code.r(1), b.code.r(2), b.code.r(3), b.code.r(4)};
    if (ra != rb) return ra < rb;
    return canonical_key(a.code) < canonical_key(b.code);
  });
  return entries;
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> r;
    auto add = [&](int table, int row, const char* label, size_t rank, size_t d, RowConstraint k,
                   std::function<std::vector<RPoly>(const PrimeField&, const Modulus&, const C6&)> fn) {
      r.push_back({table, row, label, rank, d, k, std::move(fn)});
    };
    auto lin = [](const PrimeField& F, int64_t a, int64_t b) { return FpPoly(F, {a, b}); };

    // Table 1: free codes, single generator with unit residue part.
    add(1, 1, "<g^4+uc_0g^3+vc_1g^3+uvc_2g^3>", 1, 5, RowConstraint::ProductZero01,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly g3 = gp(F, 3);
          return std::vector<RPoly>{quad(F, m, gp(F, 4), c[0] * g3, c[1] * g3, c[2] * g3)};
        });
    add(1, 2, "<g^3+uc_0g^2+vc_1g^2+uv(c_2+c_3x)g>", 2, 4, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly g2 = gp(F, 2);
          return std::vector<RPoly>{
              quad(F, m, gp(F, 3), c[0] * g2, c[1] * g2, lin(F, c[2], c[3]) * gp(F, 1))};
        });
    add(1, 3, "<g^2+u(c_0+c_1x)+v(c_2+c_3x)+uv(c_4+c_5x)>", 3, 3, RowConstraint::Eq01OrEq23,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          return std::vector<RPoly>{
              quad(F, m, gp(F, 2), lin(F, c[0], c[1]), lin(F, c[2], c[3]), lin(F, c[4], c[5]))};
        });
    add(1, 4, "<g+uc_0+vc_1+uvc_2>", 4, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          return std::vector<RPoly>{quad(F, m, gp(F, 1), FpPoly(F, {c[0]}), FpPoly(F, {c[1]}),
                                         FpPoly(F, {c[2]}))};
        });
    add(1, 5, "<1>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, FpPoly(F, {1}), z, z, z)};
        });

    // Table 2: non-free single-generator codes.
    add(2, 1, "<ug^4+vc_0g^4+uvc_1g^3>", 1, 5, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 4), c[0] * gp(F, 4), c[1] * gp(F, 3))};
        });
    add(2, 2, "<vg^4+uvc_0g^3>", 1, 5, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 4), c[0] * gp(F, 3))};
        });
    add(2, 3, "<uvg^4>", 1, 5, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, z, gp(F, 4))};
        });
    add(2, 4, "<ug^3+v(c_0+c_1x)g^3+uv(c_2+c_3x)g>", 2, 4, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 3), lin(F, c[0], c[1]) * gp(F, 3),
                                         lin(F, c[2], c[3]) * gp(F, 1))};
        });
    add(2, 5, "<vg^3+uv(c_0+c_1x)g>", 2, 4, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 3), lin(F, c[0], c[1]) * gp(F, 1))};
        });
    add(2, 6, "<uvg^3>", 2, 4, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, z, gp(F, 3))};
        });
    add(2, 7, "<ug^2+v(c_0+c_1x+c_2x^2)g^2+uv(c_3+c_4x)>", 3, 3, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 2),
                                         FpPoly(F, {c[0], c[1], c[2]}) * gp(F, 2),
                                         lin(F, c[3], c[4]))};
        });
    add(2, 8, "<vg^2+uv(c_0+c_1x)>", 3, 3, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 2), lin(F, c[0], c[1]))};
        });
    add(2, 9, "<uvg^2>", 3, 3, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, z, gp(F, 2))};
        });
    add(2, 10, "<ug+v(c_0+c_1x+c_2x^2+c_3x^3)g+uvc_4>", 4, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 1),
                                         FpPoly(F, {c[0], c[1], c[2], c[3]}) * gp(F, 1),
                                         FpPoly(F, {c[4]}))};
        });
    add(2, 11, "<vg+uvc_0>", 4, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 1), FpPoly(F, {c[0]}))};
        });
    add(2, 12, "<uvg>", 4, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, z, gp(F, 1))};
        });
    add(2, 13, "<u+v(c_0+c_1x+c_2x^2+c_3x^3+c_4x^4)>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, z, FpPoly(F, {1}), FpPoly(F, {c[0], c[1], c[2], c[3], c[4]}), z)};
        });
    add(2, 14, "<v>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, FpPoly(F, {1}), z)};
        });
    add(2, 15, "<uv>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, z, FpPoly(F, {1}))};
        });

    // Table 3: multi-generator codes.
    add(3, 1, "<g^4+uc_0g^3+vc_1g^3+uvc_2g^2, uvg^3>", 2, 4, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, gp(F, 4), c[0] * gp(F, 3), c[1] * gp(F, 3), c[2] * gp(F, 2)),
              quad(F, m, z, z, z, gp(F, 3))};
        });
    add(3, 2, "<ug^4+uvc_0g^3, vg^4+uvc_1g^3>", 2, 5, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 4), z, c[0] * gp(F, 3)),
                                    quad(F, m, z, z, gp(F, 4), c[1] * gp(F, 3))};
        });
    add(3, 3, "<ug^4+v(c_0+c_1x)g^3+uvg^2, uvg^3>", 2, 4, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, z, gp(F, 4), lin(F, c[0], c[1]) * gp(F, 3), gp(F, 2)),
              quad(F, m, z, z, z, gp(F, 3))};
        });
    add(3, 4, "<ug^4+vc_0g^3+uvc_1g^2, vg^4>", 2, 5, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, z, gp(F, 4), c[0] * gp(F, 3), c[1] * gp(F, 2)),
              quad(F, m, z, z, gp(F, 4), z)};
        });
    add(3, 5, "<ug^4+uvc_0g^2, uvg^3>", 2, 4, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 4), z, c[0] * gp(F, 2)),
                                    quad(F, m, z, z, z, gp(F, 3))};
        });
    add(3, 6, "<vg^4+uvc_0g^2, uvg^3>", 2, 4, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 4), c[0] * gp(F, 2)),
                                    quad(F, m, z, z, z, gp(F, 3))};
        });
    add(3, 7, "<vg^4+uvc_0g, uvg^2>", 3, 3, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 4), c[0] * gp(F, 1)),
                                    quad(F, m, z, z, z, gp(F, 2))};
        });
    add(3, 8, "<g^3+uc_0g+vc_1g+uvc_2, ug^2+vc_3g+uvc_4, vg^2+uvc_5, uvg>", 5, 2,
        RowConstraint::ProductZero02,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, gp(F, 3), c[0] * gp(F, 1), c[1] * gp(F, 1), FpPoly(F, {c[2]})),
              quad(F, m, z, gp(F, 2), c[3] * gp(F, 1), FpPoly(F, {c[4]})),
              quad(F, m, z, z, gp(F, 2), FpPoly(F, {c[5]})),
              quad(F, m, z, z, z, gp(F, 1))};
        });
    add(3, 9, "<ug^3+v(c_0+c_1x)g^3+uv(c_2+c_3x), uvg^2>", 3, 3, RowConstraint::None,
        [lin](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, z, gp(F, 3), lin(F, c[0], c[1]) * gp(F, 3), lin(F, c[2], c[3])),
              quad(F, m, z, z, z, gp(F, 2))};
        });
    add(3, 10, "<vg^3+uvc_0, uvg>", 4, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 3), FpPoly(F, {c[0]})),
                                    quad(F, m, z, z, z, gp(F, 1))};
        });
    add(3, 11, "<g^2+uc_0+vc_1, ug+vc_2, vg, uv>", 6, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, gp(F, 2), FpPoly(F, {c[0]}), FpPoly(F, {c[1]}), z),
              quad(F, m, z, gp(F, 1), FpPoly(F, {c[2]}), z),
              quad(F, m, z, z, gp(F, 1), z), quad(F, m, z, z, z, FpPoly(F, {1}))};
        });
    add(3, 12, "<ug^2+vc_0+uvc_1, vg^2+uvc_2, uvg>", 7, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, z, gp(F, 2), FpPoly(F, {c[0]}), FpPoly(F, {c[1]})),
              quad(F, m, z, z, gp(F, 2), FpPoly(F, {c[2]})),
              quad(F, m, z, z, z, gp(F, 1))};
        });
    add(3, 13, "<vg^2+uvc_2, uvg>", 4, 2, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 2), FpPoly(F, {c[2]})),
                                    quad(F, m, z, z, z, gp(F, 1))};
        });
    add(3, 14, "<g+uc_0+vc_1, uv>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{
              quad(F, m, gp(F, 1), FpPoly(F, {c[0]}), FpPoly(F, {c[1]}), z),
              quad(F, m, z, z, z, FpPoly(F, {1}))};
        });
    add(3, 15, "<g+uc_0, v>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, gp(F, 1), FpPoly(F, {c[0]}), z, z),
                                    quad(F, m, z, z, FpPoly(F, {1}), z)};
        });
    add(3, 16, "<g+vc_0, u+vc_1>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, gp(F, 1), z, FpPoly(F, {c[0]}), z),
                                    quad(F, m, z, FpPoly(F, {1}), FpPoly(F, {c[1]}), z)};
        });
    add(3, 17, "<g, u, v>", 6, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, gp(F, 1), z, z, z),
                                    quad(F, m, z, FpPoly(F, {1}), z, z),
                                    quad(F, m, z, z, FpPoly(F, {1}), z)};
        });
    add(3, 18, "<ug+vc_0, vg, uv>", 9, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6& c) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, gp(F, 1), FpPoly(F, {c[0]}), z),
                                    quad(F, m, z, z, gp(F, 1), z),
                                    quad(F, m, z, z, z, FpPoly(F, {1}))};
        });
    add(3, 19, "<vg, uv>", 5, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, z, gp(F, 1), z),
                                    quad(F, m, z, z, z, FpPoly(F, {1}))};
        });
    add(3, 20, "<u, v>", 10, 1, RowConstraint::None,
        [](const PrimeField& F, const Modulus& m, const C6&) {
          FpPoly z(F);
          return std::vector<RPoly>{quad(F, m, z, FpPoly(F, {1}), z, z),
                                    quad(F, m, z, z, FpPoly(F, {1}), z)};
        });
    return r;
  }();
  return rows;
}

TablesReport reproduce_tables(uint64_t seed, const Budgets& budgets) {
  PrimeField F(5);
  Modulus mod{Sign::Negacyclic, 5};
  Rng rng(seed);
  TablesReport report;

  for (const TableRow& row : table_rows()) {
    std::vector<C6> draws;
    C6 zero{};
    apply_constraint(row.constraint, zero, nullptr);
    draws.push_back(zero);
    C6 one;
    one.fill(1);
    apply_constraint(row.constraint, one, nullptr);
    draws.push_back(one);
    for (int i = 0; i < 5; ++i) {
      C6 c;
      for (auto& v : c) v = rng.fp(F);
      apply_constraint(row.constraint, c, &rng);
      draws.push_back(c);
    }

    RowVerdict v;
    v.table = row.table;
    v.row = row.row;
    v.label = row.label;
    v.expected_rank = row.expected_rank;
    v.expected_d = row.expected_d;
    v.rank_match = true;
    v.d_match = true;

    bool first = true;
    for (const C6& c : draws) {
      NegacyclicCode code = NegacyclicCode::from_generators(F, mod, row.build(F, mod, c));
      DistanceReport dist = analyze_distance(code, budgets);
      size_t got_rank = code.rank();
      size_t got_d = dist.d_oracle.value_or(0);
      bool rank_ok = got_rank == row.expected_rank;
      bool d_ok = dist.d_oracle.has_value() && got_d == row.expected_d;
      if (first) {
        v.got_rank = got_rank;
        v.got_d = got_d;
        report.entries.push_back(
            {code, dist, "table" + std::to_string(row.table) + ":row" + std::to_string(row.row)});
        first = false;
      }
      if ((!rank_ok || !d_ok) && v.detail.empty()) {
        v.got_rank = got_rank;
        v.got_d = got_d;
        std::string params = "c=[";
        for (size_t i = 0; i < c.size(); ++i) params += (i ? "," : "") + std::to_string(c[i]);
        params += "]";
        v.detail = params + " got rank " + std::to_string(got_rank) + ", d " +
                   std::to_string(got_d);
        if (!d_ok && dist.d_oracle) {
          OracleResult o = min_distance_support(code, budgets.support);
          v.detail += ", witness " + to_string(o.witness);
        }
      }
      v.rank_match = v.rank_match && rank_ok;
      v.d_match = v.d_match && d_ok;
    }
    v.verdict = (v.rank_match && v.d_match) ? "match" : "mismatch(" + v.detail + ")";
    report.verdicts.push_back(v);
  }
  return report;
}

} // namespace negaring
