#include "lacuna/bautin.hpp"

#include <algorithm>
#include <cmath>

namespace lacuna {

namespace {

std::size_t column_valuation(const ParamCurve& curve, unsigned degree, long col) {
    return static_cast<std::size_t>(col - 1) * curve.nu1 +
           (degree - static_cast<std::size_t>(col - 1)) * curve.nu2;
}

// a_0^e for e of either sign.
ExactComplex signed_power(const ExactComplex& base, long e) {
    if (e >= 0) return pow(base, static_cast<unsigned long>(e));
    return pow(base.inverse(), static_cast<unsigned long>(-e));
}

}  // namespace

BautinBlock build_block(const ParamCurve& curve, unsigned degree, const ColumnSet& t_set,
                        std::size_t degree_cap) {
    if (curve.is_rational()) throw DomainError("blocks are built from polynomial curves");
    if (t_set.size() == 0) throw DomainError("empty column selection");
    if (t_set.values.front() < 1 || t_set.values.back() > static_cast<long>(degree) + 1)
        throw DomainError("column index outside {1, ..., n_l + 1}");

    BautinBlock block;
    block.degree = degree;
    block.t_set = t_set;
    block.row_offset = column_valuation(curve, degree, t_set.values.front());

    std::size_t top_power = block.row_offset;
    std::vector<UniPoly> columns;
    columns.reserve(t_set.size());
    for (long t : t_set.values) {
        UniPoly p = compose_monomial(curve, static_cast<unsigned long>(t - 1),
                                     degree - static_cast<unsigned long>(t - 1), degree_cap);
        top_power = std::max(top_power, static_cast<std::size_t>(p.degree()));
        block.n_i_lengths.push_back(static_cast<std::size_t>(
            (degree - (t - 1)) * curve.d2 + (t - 1) * curve.d1 - curve.nu * degree));
        columns.push_back(std::move(p));
    }

    const std::size_t rows = top_power - block.row_offset + 1;
    block.entries.assign(rows, ExactRow(t_set.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            block.entries[r][c] = columns[c].coeff(block.row_offset + r);

    std::size_t max_end = 0;
    for (std::size_t i = 0; i < t_set.size(); ++i) {
        long t = t_set.at(i);
        max_end = std::max(max_end, static_cast<std::size_t>((degree - (t - 1)) * curve.d2 +
                                                             (t - 1) * curve.d1));
    }
    block.r_t = max_end - static_cast<std::size_t>(curve.nu) * degree + 1;
    return block;
}

KappaMatrix kappa_matrix(const ColumnSet& t_set, const ExactComplex& alpha0,
                         const ExactComplex& a0) {
    if (a0.is_zero()) throw DomainError("kappa matrix needs a_0 != 0");
    const std::size_t tau = t_set.size();
    KappaMatrix kappa;
    kappa.size = tau;
    kappa.entries.assign(tau, ExactRow(tau));
    ExactComplex ratio = alpha0 / a0;
    for (std::size_t j = 0; j < tau; ++j) {
        ExtractionWeights w = vandermonde_weights(t_set.prefix(j + 1));
        const Rational& k_jj = w.at(t_set.at(j));
        for (std::size_t i = 0; i <= j; ++i) {
            unsigned long shift = static_cast<unsigned long>(t_set.at(j) - t_set.at(i));
            kappa.entries[i][j] =
                pow(ratio, shift) * ExactComplex(w.at(t_set.at(i)) / k_jj);
        }
    }
    return kappa;
}

ExactMatrix triangulate_block(const BautinBlock& block, const KappaMatrix& kappa) {
    if (kappa.size != block.tau()) throw StructureError("kappa size must match block width");
    ExactMatrix out(block.rows(), ExactRow(block.tau()));
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.tau(); ++c) {
            ExactComplex acc;
            for (std::size_t i = 0; i <= c; ++i)
                acc += block.entries[r][i] * kappa.entries[i][c];
            out[r][c] = acc;
        }
    return out;
}

ExactComplex triangulated_diagonal(const ParamCurve& curve, unsigned degree,
                                   const ColumnSet& t_set, std::size_t row) {
    if (row < 1 || row > t_set.size()) throw DomainError("diagonal row out of range");
    const long t_r = t_set.at(row - 1);
    Rational prefactor = 1;
    for (std::size_t i = 0; i + 1 < row; ++i) prefactor *= Rational(t_r - t_set.at(i));
    prefactor /= Rational(factorial(row - 1));
    ExactComplex wronskian =
        curve.alpha_at(1) * curve.a_at(0) - curve.alpha_at(0) * curve.a_at(1);
    return ExactComplex(prefactor) *
           pow(curve.alpha_at(0), static_cast<unsigned long>(t_r - row)) *
           signed_power(curve.a_at(0),
                        static_cast<long>(degree) - (t_r + static_cast<long>(row) - 2)) *
           pow(wronskian, static_cast<unsigned long>(row - 1));
}

ExactComplex singular_pivot_entry(const ParamCurve& curve, unsigned degree,
                                  const ColumnSet& t_set, std::size_t col) {
    if (col < 1 || col > t_set.size()) throw DomainError("column out of range");
    JetData jet = jet_proportionality(curve);
    if (jet.fully_proportional)
        throw DomainError("pivot formula needs a non-proportional curve");
    const long t_c = t_set.at(col - 1);
    Rational k_cc = vandermonde_weights(t_set.prefix(col)).at(t_c);
    Rational prefactor = Rational(1) / (Rational(factorial(col - 1)) * k_cc);
    return ExactComplex(prefactor) * pow(jet.mu, static_cast<unsigned long>(t_c - col)) *
           signed_power(curve.a_at(0), static_cast<long>(degree) - static_cast<long>(col) + 1) *
           pow(*jet.delta_bar_k, static_cast<unsigned long>(col - 1));
}

ExactComplex closed_form_entry(const ParamCurve& curve, unsigned degree,
                               const ColumnSet& t_set, std::size_t row, std::size_t col) {
    if (curve.nu1 != curve.nu2)
        throw CaseError("closed-form entries are stated for equal multiplicities");
    if (col < 1 || col > t_set.size()) throw DomainError("column out of range");
    if (row < 1) throw DomainError("row out of range");

    const long t_c = t_set.at(col - 1);
    const std::size_t a_len = curve.alpha.size() - 1;  // number of lambda_i, i >= 1
    const std::size_t b_len = curve.a.size() - 1;      // number of l_i, i >= 1
    const std::size_t weight = row - 1;

    ColumnSet t_prefix = t_set.prefix(col);
    Rational k_cc = vandermonde_weights(t_prefix).at(t_c);

    // Node power sums K_p for the prefix, extended on demand; K_{c-1} = 1.
    std::vector<Rational> khat;  // khat[p] = sum_j t_j^p K, for p >= col
    auto khat_at = [&](std::size_t p) -> Rational {
        if (p + 1 == col) return 1;
        while (khat.size() + col <= p) khat.push_back(node_power_sum(t_prefix, khat.size() + col));
        return khat[p - col];
    };

    ExactComplex total;

    // One exponent assignment (lambda_1.., l_1..) at a time.
    std::vector<unsigned> lam(a_len, 0), ell(b_len, 0);
    auto emit = [&]() {
        std::size_t big_lambda = 0, big_l = 0;
        Integer lam_fact = 1, ell_fact = 1;
        for (std::size_t i = 0; i < a_len; ++i) {
            big_lambda += lam[i];
            lam_fact *= factorial(lam[i]);
        }
        for (std::size_t i = 0; i < b_len; ++i) {
            big_l += ell[i];
            ell_fact *= factorial(ell[i]);
        }
        const long lambda0 = t_c - 1 - static_cast<long>(big_lambda);
        if (lambda0 < 0) return;
        const long l0 =
            static_cast<long>(degree) + 1 - t_c - static_cast<long>(big_l);
        const std::size_t deg_p = big_lambda + big_l;
        if (col >= deg_p + 2) return;

        // sigma values on (1..Lambda, n+2-L..n+1).
        std::vector<Rational> xs;
        for (std::size_t x = 1; x <= big_lambda; ++x) xs.emplace_back(static_cast<long>(x));
        for (long x = static_cast<long>(degree) + 2 - static_cast<long>(big_l);
             x <= static_cast<long>(degree) + 1; ++x)
            xs.emplace_back(x);

        Rational coeff = 0;
        const Rational fact_inv = Rational(1) / Rational(lam_fact * ell_fact);
        for (std::size_t p = col - 1; p <= deg_p; ++p) {
            Rational sigma = elementary_symmetric(xs, deg_p - p);
            if ((big_lambda + p) % 2 == 1) sigma = -sigma;  // (-1)^{Lambda - p}
            coeff += sigma * fact_inv * khat_at(p);
        }
        coeff /= k_cc;
        if (coeff == 0) return;

        ExactComplex monomial =
            pow(curve.alpha_at(0), static_cast<unsigned long>(lambda0)) *
            signed_power(curve.a_at(0), l0);
        for (std::size_t i = 0; i < a_len; ++i)
            if (lam[i] > 0) monomial *= pow(curve.alpha_at(i + 1), lam[i]);
        for (std::size_t i = 0; i < b_len; ++i)
            if (ell[i] > 0) monomial *= pow(curve.a_at(i + 1), ell[i]);
        total += ExactComplex(coeff) * monomial;
    };

    // Enumerate all (lam, ell) with sum_i i*(lam_i + ell_i) == weight.
    auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
        if (pos == a_len + b_len) {
            if (remaining == 0) emit();
            return;
        }
        const std::size_t step = pos < a_len ? pos + 1 : pos - a_len + 1;
        unsigned& slot = pos < a_len ? lam[pos] : ell[pos - a_len];
        for (std::size_t used = 0; used * step <= remaining; ++used) {
            slot = static_cast<unsigned>(used);
            self(self, pos + 1, remaining - used * step);
        }
        slot = 0;
    };
    recurse(recurse, 0, weight);
    return total;
}

BautinMatrix assemble_matrix(const ParamCurve& curve, const LacunarityDiagram& diagram,
                             std::size_t degree_cap) {
    BautinMatrix m;
    m.curve = curve;
    m.diagram = diagram;
    m.cols = diagram.m();
    m.total_rows = static_cast<std::size_t>(diagram.d) * curve.big_d + 1;
    for (std::size_t l = 0; l < diagram.block_count(); ++l)
        m.blocks.push_back(
            build_block(curve, diagram.degrees[l], diagram.selections[l], degree_cap));
    return m;
}

ExactRow BautinMatrix::row(std::size_t k) const {
    ExactRow out(cols);
    std::size_t col0 = 0;
    for (const BautinBlock& block : blocks) {
        if (k >= block.row_offset && k < block.row_offset + block.rows()) {
            const ExactRow& src = block.entries[k - block.row_offset];
            for (std::size_t c = 0; c < src.size(); ++c) out[col0 + c] = src[c];
        }
        col0 += block.tau();
    }
    return out;
}

MatrixStats matrix_stats(const BautinMatrix& matrix) {
    MatrixStats stats;
    RowBasis basis(matrix.cols);
    std::vector<ExactRow> kept_rows;
    for (std::size_t k = 0; k < matrix.total_rows; ++k) {
        ExactRow r = matrix.row(k);
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
            kept_rows.push_back(std::move(r));
        }
    }
    if (stats.basis_rows.empty())
        throw StructureError("zero Bautin matrix: the family is identically zero");
    stats.b = stats.basis_rows.back();
    stats.sigma = stats.basis_rows.size();

    const std::vector<std::size_t>& pivots = basis.pivot_cols();
    ExactMatrix minor(stats.sigma, ExactRow(stats.sigma));
    for (std::size_t i = 0; i < stats.sigma; ++i)
        for (std::size_t j = 0; j < stats.sigma; ++j) minor[i][j] = kept_rows[i][pivots[j]];
    stats.delta_sq = determinant(std::move(minor)).abs_sq();
    stats.delta_exact =
        std::nextafter(std::nextafter(std::sqrt(stats.delta_sq.get_d()), 0.0), 0.0);
    return stats;
}

Rational named_minor_sq(const BautinMatrix& matrix) {
    const ParamCurve& curve = matrix.curve;
    JetData jet = jet_proportionality(curve);
    const bool proportional = jet.fully_proportional;
    const bool equal_mult = curve.nu1 == curve.nu2;

    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::size_t col0 = 0;
    for (std::size_t l = 0; l < matrix.blocks.size(); ++l) {
        const BautinBlock& block = matrix.blocks[l];
        if (proportional) {
            rows.push_back(block.row_offset);
            cols.push_back(col0);
        } else if (equal_mult) {
            for (std::size_t i = 0; i < block.tau(); ++i) {
                rows.push_back(block.row_offset + (jet.k + 1) * i);
                cols.push_back(col0 + i);
            }
        } else {
            for (std::size_t i = 0; i < block.tau(); ++i) {
                rows.push_back(column_valuation(curve, block.degree, block.t_set.at(i)));
                cols.push_back(col0 + i);
            }
        }
        col0 += block.tau();
    }
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
        throw StructureError("named minor rows collide between blocks");

    ExactMatrix minor(rows.size(), ExactRow(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ExactRow full = matrix.row(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j) minor[i][j] = full[cols[j]];
    }
    return determinant(std::move(minor)).abs_sq();
}

}  // namespace lacuna
