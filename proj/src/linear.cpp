#include "negaring/linear.hpp"

#include <algorithm>

namespace negaring {

EchelonBasis::EchelonBasis(PrimeField field, size_t cols) : field_(field), cols_(cols) {}

Row EchelonBasis::reduce(Row r) const {
  if (r.size() != cols_) fail(errc::internal_invariant, "row width mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    int64_t c = r[pivots_[i]];
    if (c == 0) continue;
    const Row& b = rows_[i];
    for (size_t j = pivots_[i]; j < cols_; ++j) {
      if (b[j] != 0) r[j] = field_.sub(r[j], field_.mul(c, b[j]));
    }
  }
  return r;
}

bool EchelonBasis::contains(const Row& r) const {
  Row rem = reduce(r);
  return std::all_of(rem.begin(), rem.end(), [](int64_t x) { return x == 0; });
}

bool EchelonBasis::add(Row r) {
  r = reduce(std::move(r));
  size_t p = 0;
  while (p < cols_ && r[p] == 0) ++p;
  if (p == cols_) return false;

  int64_t inv = field_.inv(r[p]);
  for (size_t j = p; j < cols_; ++j) r[j] = field_.mul(r[j], inv);

  // Back-eliminate the new pivot column from existing rows.
  for (size_t i = 0; i < rows_.size(); ++i) {
    int64_t c = rows_[i][p];
    if (c == 0) continue;
    for (size_t j = p; j < cols_; ++j) {
      if (r[j] != 0) rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, r[j]));
    }
  }

  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(r));
  return true;
}

size_t restricted_rank(const PrimeField& field, const std::vector<Row>& rows,
                       const std::vector<size_t>& cols) {
  EchelonBasis basis(field, cols.size());
  for (const Row& r : rows) {
    Row sub(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) sub[j] = r[cols[j]];
    basis.add(std::move(sub));
  }
  return basis.dim();
}

std::optional<Row> restricted_kernel_vector(const PrimeField& field,
                                            const std::vector<Row>& rows,
                                            const std::vector<size_t>& cols) {
  size_t k = rows.size();
  // Augment each restricted row with its combination coordinates; a row that
  // reduces to zero on the restricted part exposes its combination there.
  EchelonBasis basis(field, cols.size() + k);
  for (size_t i = 0; i < k; ++i) {
    Row aug(cols.size() + k, 0);
    for (size_t j = 0; j < cols.size(); ++j) aug[j] = rows[i][cols[j]];
    aug[cols.size() + i] = 1;
    Row rem = basis.reduce(std::move(aug));
    bool restricted_zero = true;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (rem[j] != 0) {
        restricted_zero = false;
        break;
      }
    }
    if (restricted_zero) {
      return Row(rem.begin() + static_cast<long>(cols.size()), rem.end());
    }
    basis.add(std::move(rem));
  }
  return std::nullopt;
}

} // namespace negaring
