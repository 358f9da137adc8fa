#include "negaring/distance.hpp"

#include <limits>

#include "negaring/errors.hpp"

namespace negaring {

size_t hamming_weight(const RPoly& f) {
  size_t n = f.modulus().n;
  size_t w = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!f.coeff(i).is_zero()) ++w;
  }
  return w;
}

PAdicExpansion p_adic_classify(int64_t p, size_t l, int64_t t) {
  if (p < 2 || l == 0) fail(errc::invalid_argument, "digit base and count must be positive");
  int64_t cap = 1;
  for (size_t i = 0; i < l; ++i) {
    if (cap > std::numeric_limits<int64_t>::max() / p) fail(errc::out_of_range, "p^l overflows");
    cap *= p;
  }
  if (t <= 0 || t >= cap) fail(errc::out_of_range, "digit pattern needs 0 < t < p^l");

  PAdicExpansion e;
  e.p = p;
  e.l = l;
  e.t = t;
  e.digits.assign(l, 0);
  int64_t m = t;
  for (size_t i = 0; i < l; ++i) {
    e.digits[i] = m % p;
    m /= p;
  }
  size_t q = 0;
  while (q < l && e.digits[l - 1 - q] != 0) ++q;
  e.q = q;
  if (q == l) {
    e.kind = ExpansionKind::FullExpansion;
  } else {
    bool tail_nonzero = false;
    for (size_t pos = 0; pos + q + 1 < l; ++pos) {
      if (e.digits[pos] != 0) tail_nonzero = true;
    }
    e.kind = tail_nonzero ? ExpansionKind::NonZeroExpansion : ExpansionKind::ZeroExpansion;
  }
  return e;
}

OracleResult min_distance_support(const NegacyclicCode& code, uint64_t budget) {
  const EchelonBasis& basis = code.basis();
  if (basis.dim() == 0) fail(errc::zero_code, "zero code has no distance");
  const PrimeField& F = code.field();
  const size_t n = code.n();
  const std::vector<Row>& rows = basis.rows();
  uint64_t tests = 0;

  for (size_t w = 1; w <= n; ++w) {
    std::vector<size_t> supp(w);
    for (size_t i = 0; i < w; ++i) supp[i] = i;
    while (true) {
      if (tests >= budget) fail(errc::budget_exceeded, "support oracle: kernel-test budget exhausted");
      ++tests;

      std::vector<size_t> cols;
      cols.reserve(4 * (n - w));
      size_t si = 0;
      for (size_t pos = 0; pos < n; ++pos) {
        if (si < w && supp[si] == pos) {
          ++si;
          continue;
        }
        for (size_t c = 0; c < 4; ++c) cols.push_back(4 * pos + c);
      }
      if (auto lambda = restricted_kernel_vector(F, rows, cols)) {
        Row word(4 * n, 0);
        for (size_t i = 0; i < rows.size(); ++i) {
          int64_t li = (*lambda)[i];
          if (li == 0) continue;
          for (size_t c = 0; c < 4 * n; ++c) word[c] = F.add(word[c], F.mul(li, rows[i][c]));
        }
        RPoly witness = RPoly::from_vector(F, code.modulus(), word);
        if (hamming_weight(witness) != w) {
          fail(errc::internal_invariant, "support oracle witness has wrong weight");
        }
        return {w, witness, tests};
      }

      size_t i = w;
      bool advanced = false;
      while (i-- > 0) {
        if (supp[i] != n - w + i) {
          ++supp[i];
          for (size_t j = i + 1; j < w; ++j) supp[j] = supp[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  fail(errc::internal_invariant, "support oracle found no codeword in a nonzero code");
}

OracleResult min_distance_enum(const NegacyclicCode& code, uint64_t budget) {
  const EchelonBasis& basis = code.basis();
  const size_t dim = basis.dim();
  if (dim == 0) fail(errc::zero_code, "zero code has no distance");
  const PrimeField& F = code.field();
  const int64_t p = F.p();

  uint64_t total = 1; // p^dim counts the zero word, so p^dim - 1 must fit the budget
  bool overflow = false;
  for (size_t i = 0; i < dim; ++i) {
    if (total > (budget + 1) / static_cast<uint64_t>(p)) {
      overflow = true;
      break;
    }
    total *= static_cast<uint64_t>(p);
  }
  if (overflow || total - 1 > budget)
    fail(errc::budget_exceeded, "enumeration oracle: p^dim exceeds budget");

  const auto& rows = basis.rows();
  const size_t width = 4 * code.n();
  std::vector<int64_t> digit(dim, 0);
  Row cur(width, 0);
  Row best_word;
  size_t best = std::numeric_limits<size_t>::max();
  uint64_t visited = 0;

  auto add_row = [&](size_t i) {
    const Row& r = rows[i];
    for (size_t c = 0; c < width; ++c) cur[c] = F.add(cur[c], r[c]);
  };

  while (true) {
    size_t i = 0;
    while (i < dim && digit[i] == p - 1) {
      digit[i] = 0;
      add_row(i); // one more copy wraps the digit to zero mod p
      ++i;
    }
    if (i == dim) break;
    ++digit[i];
    add_row(i);
    ++visited;

    size_t wt = 0;
    for (size_t pos = 0; pos < code.n(); ++pos) {
      size_t b = 4 * pos;
      if (cur[b] | cur[b + 1] | cur[b + 2] | cur[b + 3]) ++wt;
    }
    if (wt < best) {
      best = wt;
      best_word = cur;
      if (best == 1) break;
    }
  }

  RPoly witness = RPoly::from_vector(F, code.modulus(), best_word);
  return {best, witness, visited};
}

FormulaResult distance_formula(const NegacyclicCode& code) {
  const PrimeField& F = code.field();
  const int64_t p = F.p();
  size_t m = code.n();
  size_t l = 0;
  while (m % static_cast<size_t>(p) == 0) {
    m /= static_cast<size_t>(p);
    ++l;
  }
  if (m != 1 || l == 0) fail(errc::not_applicable, "length is not a power of the characteristic");
  if (code.is_zero()) fail(errc::zero_code, "zero code has no distance");

  FpPoly xp1(F, {1, 1});
  for (size_t i = 1; i <= 4; ++i) {
    if (!(code.g(i) == poly_pow(xp1, code.r(i)))) {
      fail(errc::internal_invariant, "torsion generator is not a power of x+1");
    }
  }
  const int64_t t1 = static_cast<int64_t>(code.r(1));
  const int64_t t2 = static_cast<int64_t>(code.r(2));
  const int64_t t3 = static_cast<int64_t>(code.r(3));
  const int64_t t4 = static_cast<int64_t>(code.r(4));

  FormulaResult res;
  res.hypothesis_met = t1 > t2 && t2 > t4 && t1 > t3 && t3 > t4 && t4 > 0;

  if (t4 == 0) {
    // uv itself lies in the code
    res.d = 1;
    res.branch = "uv-unit";
    return res;
  }
  int64_t small = 1;
  for (size_t i = 0; i + 1 < l; ++i) small *= p;
  if (t4 <= small) {
    res.d = 2;
    res.branch = "small-t4";
    return res;
  }

  PAdicExpansion e = p_adic_classify(p, l, t4);
  uint64_t d = 1;
  for (size_t i = 1; i <= e.q; ++i) d *= static_cast<uint64_t>(e.digits[l - i] + 1);
  if (e.kind == ExpansionKind::NonZeroExpansion) d *= 2;
  res.d = static_cast<size_t>(d);
  switch (e.kind) {
    case ExpansionKind::FullExpansion: res.branch = "full"; break;
    case ExpansionKind::ZeroExpansion: res.branch = "zero"; break;
    case ExpansionKind::NonZeroExpansion: res.branch = "nonzero"; break;
  }
  res.expansion = e;
  return res;
}

DistanceReport analyze_distance(const NegacyclicCode& code, const Budgets& budgets) {
  DistanceReport rep;
  if (code.is_zero()) {
    rep.oracle_undefined = true;
    rep.method = "none";
    return rep;
  }

  try {
    OracleResult r = min_distance_support(code, budgets.support);
    rep.d_oracle = r.d;
    rep.witness_weight = hamming_weight(r.witness);
    rep.method = "support";
  } catch (const error& e) {
    if (e.kind() != errc::budget_exceeded) throw;
    try {
      OracleResult r = min_distance_enum(code, budgets.enumeration);
      rep.d_oracle = r.d;
      rep.witness_weight = hamming_weight(r.witness);
      rep.method = "enum";
    } catch (const error& e2) {
      if (e2.kind() != errc::budget_exceeded) throw;
    }
  }

  try {
    FormulaResult f = distance_formula(code);
    rep.d_formula = f.d;
    rep.hypothesis_met = f.hypothesis_met;
  } catch (const error& e) {
    if (e.kind() != errc::not_applicable) throw;
  }

  if (!rep.d_oracle) rep.method = rep.d_formula ? "formula" : "none";
  if (rep.d_oracle && rep.d_formula) rep.agreement = (*rep.d_oracle == *rep.d_formula);
  return rep;
}

} // namespace negaring
