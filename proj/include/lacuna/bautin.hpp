#pragma once

#include "lacuna/exact_linalg.hpp"
#include "lacuna/lacunarity.hpp"

namespace lacuna {

// One block of the Bautin matrix: the contribution of the degree-n_l
// monomials selected by T. Column i holds the coefficients of
// P1^{t_i - 1} P2^{n_l - (t_i - 1)}; stored rows start at the z-power
// nu_bar (the valuation of the first column) and run through the largest
// column degree.
struct BautinBlock {
    unsigned degree = 0;
    ColumnSet t_set;
    std::size_t row_offset = 0;  // z-power of entries[0]
    ExactMatrix entries;         // rows x tau
    std::vector<std::size_t> n_i_lengths;  // active length N_I per column
    std::size_t r_t = 0;  // row count including leading zeros, from power nu * n_l

    std::size_t rows() const { return entries.size(); }
    std::size_t tau() const { return t_set.size(); }
};

BautinBlock build_block(const ParamCurve& curve, unsigned degree, const ColumnSet& t_set,
                        std::size_t degree_cap = kDefaultDegreeCap);

// Upper triangular column-operation matrix with unit diagonal,
//   (i,j) = (alpha_0/a_0)^{t_j - t_i} K_{{t_1..t_j}, t_i} / K_{{t_1..t_j}, t_j}
// for i <= j. Multiplying a block by it on the right makes the upper
// tau x tau minor lower triangular.
struct KappaMatrix {
    std::size_t size = 0;
    ExactMatrix entries;
};

KappaMatrix kappa_matrix(const ColumnSet& t_set, const ExactComplex& alpha0,
                         const ExactComplex& a0);

// block * kappa, exact.
ExactMatrix triangulate_block(const BautinBlock& block, const KappaMatrix& kappa);

// Entry (row, col), 1-based within the block rows starting at nu_bar, of
// block * kappa, evaluated from the closed-form coefficient formula (sum
// over admissible exponent data of the monomial value times the
// sigma/node-power pairing) instead of the matrix product. Only valid for
// equal multiplicities.
ExactComplex closed_form_entry(const ParamCurve& curve, unsigned degree,
                               const ColumnSet& t_set, std::size_t row, std::size_t col);

// The closed-form diagonal of the triangulated block at row r (1-based):
//   prod_{i<r}(t_r - t_i) / (r-1)! * alpha_0^{t_r - r}
//     * a_0^{n_l - (t_r + r - 2)} * (alpha_1 a_0 - alpha_0 a_1)^{r-1}.
ExactComplex triangulated_diagonal(const ParamCurve& curve, unsigned degree,
                                   const ColumnSet& t_set, std::size_t row);

// Pivot entry of the singular case: at column c the triangulated block
// vanishes on rows < (k+1)c - k and at row (k+1)c - k equals
//   mu^{t_c - c} / ((c-1)! K_{{t_1..t_c}, t_c}) * a_0^{n_l - c + 1}
//     * (alpha_{k+1} - mu a_{k+1})^{c-1}.
ExactComplex singular_pivot_entry(const ParamCurve& curve, unsigned degree,
                                  const ColumnSet& t_set, std::size_t col);

// The full (selected-columns) Bautin matrix of the family over the given
// diagram: blocks at their global row offsets, rows indexed by the power
// of z from 0 through d*D.
struct BautinMatrix {
    ParamCurve curve;
    LacunarityDiagram diagram;
    std::vector<BautinBlock> blocks;
    std::size_t total_rows = 0;  // d*D + 1
    std::size_t cols = 0;        // m

    // The coefficient row of v_k as a vector over the m parameters.
    ExactRow row(std::size_t k) const;
};

BautinMatrix assemble_matrix(const ParamCurve& curve, const LacunarityDiagram& diagram,
                             std::size_t degree_cap = kDefaultDegreeCap);

struct MatrixStats {
    std::size_t b = 0;      // Bautin index
    std::size_t sigma = 0;  // rank
    std::vector<std::size_t> basis_rows;  // greedy top-down independent rows
    // |det|^2 of the witness minor (basis rows x elimination pivot
    // columns): an exact certified lower bound for delta^2, not the
    // maximum over all minors.
    Rational delta_sq;
    double delta_exact = 0;  // sqrt of delta_sq, rounded down
};

MatrixStats matrix_stats(const BautinMatrix& matrix);

// |det|^2 of the specific minor behind the closed-form delta lower bound:
// per block, the echelon pivot rows (distinct multiplicities), the rows
// nu_bar + (k+1)(i-1) (equal multiplicities), or the first row and first
// column only (proportional components), against the block's own columns.
Rational named_minor_sq(const BautinMatrix& matrix);

}  // namespace lacuna
