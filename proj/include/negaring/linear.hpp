#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negaring/fieldpoly.hpp"

namespace negaring {

using Row = std::vector<int64_t>;

// Row space in reduced row-echelon form, maintained incrementally.
class EchelonBasis {
public:
  EchelonBasis(PrimeField field, size_t cols);

  // Reduces r against the basis; inserts the remainder if nonzero.
  // Returns true when the row enlarged the span.
  bool add(Row r);

  bool contains(const Row& r) const;
  Row reduce(Row r) const;

  size_t dim() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool operator==(const EchelonBasis& o) const {
    return field_ == o.field_ && cols_ == o.cols_ && rows_ == o.rows_;
  }

private:
  PrimeField field_;
  size_t cols_;
  std::vector<Row> rows_;   // sorted by pivot column
  std::vector<size_t> pivots_;
};

// Rank of the rows restricted to the given columns.
size_t restricted_rank(const PrimeField& field, const std::vector<Row>& rows,
                       const std::vector<size_t>& cols);

// Finds a nonzero combination of the rows vanishing on the given columns;
// returns the combination coefficients (length rows.size()), or nullopt when
// the restriction has full rank. Short-circuits on the first dependent row.
std::optional<Row> restricted_kernel_vector(const PrimeField& field,
                                            const std::vector<Row>& rows,
                                            const std::vector<size_t>& cols);

} // namespace negaring
