#include "lacuna/rational_ext.hpp"

namespace lacuna {

GMatrix g_matrix(const UniPoly& v, unsigned long n, std::size_t size) {
    if (size == 0) throw DomainError("G matrix needs at least one row");
    GMatrix g;
    g.size = size;
    g.s = series_inverse_power(v, n, size - 1);
    return g;
}

ExactRow RationalBautinRows::row(std::size_t k) const {
    ExactRow out(cols);
    std::size_t col0 = 0;
    for (const RationalBlockRows& block : blocks) {
        if (k < block.rows.size())
            for (std::size_t c = 0; c < block.t_set.size(); ++c)
                out[col0 + c] = block.rows[k][c];
        col0 += block.t_set.size();
    }
    return out;
}

RationalBautinRows rational_bautin_rows(const ParamCurve& curve,
                                        const LacunarityDiagram& diagram,
                                        std::size_t row_cap, std::size_t degree_cap) {
    if (!curve.is_rational()) throw DomainError("curve has no denominator");
    const UniPoly& v = *curve.v;

    // A polynomial-only copy for the numerator compositions.
    ParamCurve numerator = ParamCurve::make(curve.p1, curve.p2);

    RationalBautinRows out;
    out.row_cap = row_cap;
    out.cols = diagram.m();

    for (std::size_t l = 0; l < diagram.block_count(); ++l) {
        const unsigned n = diagram.degrees[l];
        const ColumnSet& t_set = diagram.selections[l];

        // V^{n} for the division route, truncated use only.
        UniPoly v_pow = v.pow(n, degree_cap);
        ExactComplex w0_inv = v_pow.coeff(0).inverse();
        GMatrix g = g_matrix(v, n, row_cap + 1);

        RationalBlockRows block;
        block.degree = n;
        block.t_set = t_set;
        block.rows.assign(row_cap + 1, ExactRow(t_set.size()));

        for (std::size_t c = 0; c < t_set.size(); ++c) {
            long t = t_set.at(c);
            UniPoly numer = compose_monomial(numerator, static_cast<unsigned long>(t - 1),
                                             n - static_cast<unsigned long>(t - 1), degree_cap);
            // Route 1: long division of the series.
            std::vector<ExactComplex> q(row_cap + 1);
            for (std::size_t k = 0; k <= row_cap; ++k) {
                ExactComplex acc = numer.coeff(k);
                for (std::size_t j = 1; j <= k; ++j) {
                    if (v_pow.coeff(j).is_zero()) continue;
                    acc -= v_pow.coeff(j) * q[k - j];
                }
                q[k] = w0_inv * acc;
            }
            // Route 2: G times the zero-padded polynomial column.
            for (std::size_t k = 0; k <= row_cap; ++k) {
                ExactComplex acc;
                for (std::size_t j = 0; j <= k; ++j) {
                    const ExactComplex& r = numer.coeff(k - j);
                    if (!r.is_zero()) acc += g.s[j] * r;
                }
                if (!(acc == q[k]))
                    throw StructureError("series division and G-product disagree");
                block.rows[k][c] = std::move(q[k]);
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

std::size_t default_row_cap(const ParamCurve& curve, const LacunarityDiagram& diagram) {
    ParamCurve numerator = ParamCurve::make(curve.p1, curve.p2);
    DiagramAggregates agg = aggregates(diagram, numerator);
    ConditionTag pseudo{ConditionKind::L1, true, std::nullopt};
    ClosedInvariants inv = closed_invariants(numerator, diagram, agg, pseudo);
    std::size_t longest = 0;
    for (std::size_t l = 0; l < diagram.block_count(); ++l) {
        const ColumnSet& t = diagram.selections[l];
        for (long tv : t.values) {
            std::size_t len = (diagram.degrees[l] - (tv - 1)) * curve.d2 +
                              static_cast<std::size_t>(tv - 1) * curve.d1;
            longest = std::max(longest, len);
        }
    }
    return inv.b + longest + 1;
}

MatrixStats rational_matrix_stats(const RationalBautinRows& rows) {
    MatrixStats stats;
    RowBasis basis(rows.cols);
    std::vector<ExactRow> kept;
    for (std::size_t k = 0; k <= rows.row_cap; ++k) {
        ExactRow r = rows.row(k);
        bool any = false;
        for (const ExactComplex& x : r)
            if (!x.is_zero()) {
                any = true;
                break;
            }
        if (!any) continue;
        ExactRow copy = r;
        if (basis.insert(std::move(copy))) {
            stats.basis_rows.push_back(k);
            kept.push_back(std::move(r));
        }
    }
    if (stats.basis_rows.empty()) throw StructureError("zero rational Bautin matrix");
    stats.b = stats.basis_rows.back();
    stats.sigma = stats.basis_rows.size();
    const std::vector<std::size_t>& pivots = basis.pivot_cols();
    ExactMatrix minor(stats.sigma, ExactRow(stats.sigma));
    for (std::size_t i = 0; i < stats.sigma; ++i)
        for (std::size_t j = 0; j < stats.sigma; ++j) minor[i][j] = kept[i][pivots[j]];
    stats.delta_sq = determinant(std::move(minor)).abs_sq();
    stats.delta_exact =
        std::nextafter(std::nextafter(std::sqrt(stats.delta_sq.get_d()), 0.0), 0.0);
    return stats;
}

BoundReport rational_bound_report(const NormalizedCurve& curve,
                                  const LacunarityDiagram& diagram,
                                  const ConditionTag& condition) {
    if (!curve.exact.is_rational())
        throw DomainError("rational report needs a curve with a denominator");
    if (condition.kind == ConditionKind::L3a || condition.kind == ConditionKind::L3b)
        throw CaseError("the rational reduction is stated for L1 / L2a / L2b only");
    return build_bound_report(curve, diagram, condition, /*rational_mode=*/true);
}

}  // namespace lacuna
