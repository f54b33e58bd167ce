#include "lacuna/exact_linalg.hpp"

namespace lacuna {

bool RowBasis::insert(ExactRow row) {
    if (row.size() != cols_) throw StructureError("row width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (row[p].is_zero()) continue;
        ExactComplex factor = row[p];  // basis rows are pivot-normalized
        for (std::size_t j = 0; j < cols_; ++j) row[j] -= factor * rows_[i][j];
    }
    std::size_t pivot = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!row[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == cols_) return false;
    ExactComplex inv = row[pivot].inverse();
    for (std::size_t j = 0; j < cols_; ++j) row[j] = inv * row[j];
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

ExactComplex determinant(ExactMatrix m) {
    const std::size_t n = m.size();
    for (const ExactRow& r : m)
        if (r.size() != n) throw StructureError("determinant needs a square matrix");
    ExactComplex det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return ExactComplex(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        ExactComplex inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            ExactComplex factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

ExactRow kernel_vector(const std::vector<ExactRow>& rows, std::size_t cols) {
    RowBasis basis(cols);
    for (const ExactRow& r : rows) basis.insert(r);
    if (basis.rank() + 1 != cols)
        throw StructureError("kernel dimension is " + std::to_string(cols - basis.rank()) +
                             ", expected 1");
    // Full RREF to read the kernel off the free column.
    std::vector<ExactRow> rref;
    std::vector<std::size_t> pivots;
    for (const ExactRow& r : rows) {
        ExactRow row = r;
        for (std::size_t i = 0; i < rref.size(); ++i) {
            const std::size_t p = pivots[i];
            if (row[p].is_zero()) continue;
            ExactComplex factor = row[p];
            for (std::size_t j = 0; j < cols; ++j) row[j] -= factor * rref[i][j];
        }
        std::size_t pivot = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (!row[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == cols) continue;
        ExactComplex inv = row[pivot].inverse();
        for (std::size_t j = 0; j < cols; ++j) row[j] = inv * row[j];
        // Back-substitute into earlier rows.
        for (std::size_t i = 0; i < rref.size(); ++i) {
            if (rref[i][pivot].is_zero()) continue;
            ExactComplex factor = rref[i][pivot];
            for (std::size_t j = 0; j < cols; ++j) rref[i][j] -= factor * row[j];
        }
        rref.push_back(std::move(row));
        pivots.push_back(pivot);
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::size_t free_col = cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) {
            free_col = j;
            break;
        }
    ExactRow kernel(cols);
    kernel[free_col] = ExactComplex(1);
    for (std::size_t i = 0; i < rref.size(); ++i) kernel[pivots[i]] = -rref[i][free_col];
    return kernel;
}

}  // namespace lacuna
