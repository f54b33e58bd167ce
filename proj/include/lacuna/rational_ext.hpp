#pragma once

#include "lacuna/bautin.hpp"
#include "lacuna/bounds.hpp"

namespace lacuna {

// Lower-triangular Toeplitz matrix of the Taylor coefficients s_k of
// 1/V^{n_l}: entry (i,j) = s_{i-j}. s_0 = 1/beta_0^{n_l} != 0, so the
// matrix is invertible.
struct GMatrix {
    std::size_t size = 0;
    std::vector<ExactComplex> s;

    const ExactComplex& entry(std::size_t i, std::size_t j) const {
        static const ExactComplex zero{};
        return j <= i ? s[i - j] : zero;
    }
};

GMatrix g_matrix(const UniPoly& v, unsigned long n, std::size_t size);

// One block of the Bautin matrix of g_lambda = Q_lambda(P1/V, P2/V):
// rows 0..row_cap of the Taylor coefficients of each selected column
// P1^{t-1} P2^{n_l-(t-1)} / V^{n_l}.
struct RationalBlockRows {
    unsigned degree = 0;
    ColumnSet t_set;
    ExactMatrix rows;  // (row_cap + 1) x tau, row k = coefficient of z^k
};

struct RationalBautinRows {
    std::vector<RationalBlockRows> blocks;
    std::size_t row_cap = 0;
    std::size_t cols = 0;

    ExactRow row(std::size_t k) const;
};

// Computes each column two ways (direct series division by V^{n_l}, and
// the G * padded-polynomial-block product) and requires exact agreement.
RationalBautinRows rational_bautin_rows(const ParamCurve& curve,
                                        const LacunarityDiagram& diagram,
                                        std::size_t row_cap,
                                        std::size_t degree_cap = kDefaultDegreeCap);

// Closed-form b plus the largest block length, so rank stabilization is
// observable inside the cap.
std::size_t default_row_cap(const ParamCurve& curve, const LacunarityDiagram& diagram);

// b, sigma and witness minor from the truncated rational rows, by the
// same greedy elimination as the polynomial matrix_stats.
MatrixStats rational_matrix_stats(const RationalBautinRows& rows);

// Section-6 bound report: b and sigma as in the polynomial case, delta
// and the Z / rho formulas carrying the beta_0 adjustments. Requires a
// normalized rational curve and one of L1 / L2a / L2b.
BoundReport rational_bound_report(const NormalizedCurve& curve,
                                  const LacunarityDiagram& diagram,
                                  const ConditionTag& condition);

}  // namespace lacuna
