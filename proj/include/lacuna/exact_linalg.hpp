#pragma once

#include <optional>
#include <vector>

#include "lacuna/exact.hpp"

namespace lacuna {

using ExactRow = std::vector<ExactComplex>;
using ExactMatrix = std::vector<ExactRow>;

// Incremental row space: rows are reduced against the stored basis as they
// arrive. Keeps one pivot column per independent row.
class RowBasis {
  public:
    explicit RowBasis(std::size_t cols) : cols_(cols) {}

    // Returns true when the row is independent of everything inserted so
    // far (the reduced row is then kept).
    bool insert(ExactRow row);

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  private:
    std::size_t cols_;
    std::vector<ExactRow> rows_;
    std::vector<std::size_t> pivots_;
};

ExactComplex determinant(ExactMatrix m);

// Kernel of the given rows in C^cols, which must be one-dimensional;
// throws StructureError otherwise. The returned vector is exact and
// nonzero.
ExactRow kernel_vector(const std::vector<ExactRow>& rows, std::size_t cols);

}  // namespace lacuna
