#include "lacuna/lacunarity.hpp"

#include <algorithm>
#include <cmath>

namespace lacuna {

LacunarityDiagram LacunarityDiagram::make(std::vector<unsigned> degrees,
                                          std::vector<ColumnSet> selections) {
    if (degrees.empty()) throw DomainError("diagram needs at least one degree");
    if (degrees.size() != selections.size())
        throw DomainError("one column selection per degree is required");
    for (std::size_t l = 0; l < degrees.size(); ++l) {
        if (l > 0 && degrees[l] <= degrees[l - 1])
            throw DomainError("diagram degrees must be strictly increasing");
        const ColumnSet& t = selections[l];
        if (t.size() == 0) throw DomainError("empty column selection");
        if (t.values.front() < 1 || t.values.back() > static_cast<long>(degrees[l]) + 1)
            throw DomainError("column selection must lie in {1, ..., n_l + 1}");
    }
    LacunarityDiagram out;
    out.d = degrees.back();
    out.degrees = std::move(degrees);
    out.selections = std::move(selections);
    if (out.m() < 1) throw DomainError("diagram must carry at least one parameter");
    return out;
}

std::size_t LacunarityDiagram::m() const {
    std::size_t m = 0;
    for (const ColumnSet& t : selections) m += t.size();
    return m;
}

const char* condition_name(ConditionKind kind) {
    switch (kind) {
        case ConditionKind::L1: return "L1";
        case ConditionKind::L2a: return "L2a";
        case ConditionKind::L2b: return "L2b";
        case ConditionKind::L3a: return "L3a";
        case ConditionKind::L3b: return "L3b";
    }
    return "?";
}

DiagramAggregates aggregates(const LacunarityDiagram& diagram, const ParamCurve& curve) {
    DiagramAggregates agg;
    const std::size_t blocks = diagram.block_count();
    agg.nu_bar.resize(blocks);
    agg.nu_tilde.resize(blocks);
    agg.t_bar_ell.resize(blocks);
    agg.c_ell.resize(blocks);

    for (std::size_t l = 0; l < blocks; ++l) {
        const ColumnSet& t = diagram.selections[l];
        const unsigned n = diagram.degrees[l];
        const std::size_t tau = t.size();
        auto row_of = [&](long col) {
            return static_cast<std::size_t>(col - 1) * curve.nu1 +
                   (n - static_cast<std::size_t>(col - 1)) * curve.nu2;
        };
        agg.nu_bar[l] = row_of(t.values.front());
        agg.nu_tilde[l] = row_of(t.values.back());
        std::size_t tb = 0;
        for (long v : t.values) tb += static_cast<std::size_t>(v);
        agg.t_bar_ell[l] = tb;
        agg.t_bar += tb;
        agg.t_bar_prime1 += static_cast<std::size_t>(t.values.front());
        agg.n_bar += n;
        agg.tau_n_bar += tau * n;
        agg.tau_bar += tau * (tau + 1) / 2;
        agg.tau_bar_prime += tau * (tau - 1) / 2;

        Rational c = 1;
        for (std::size_t i = 1; i <= tau; ++i) {
            c *= Rational(factorial(i - 1));
            Rational k = vandermonde_weights(t.prefix(i)).at(t.at(i - 1));
            c *= abs(k);
        }
        agg.c_ell[l] = Rational(1) / c;
        agg.c_bar *= agg.c_ell[l];
    }

    // ell_e: argmax of nu_tilde for distinct multiplicities, argmax of
    // nu_bar + (k+1) tau for equal multiplicities.
    if (curve.nu1 != curve.nu2) {
        std::size_t best = 0;
        for (std::size_t l = 1; l < blocks; ++l)
            if (agg.nu_tilde[l] > agg.nu_tilde[best]) best = l;
        agg.ell_e = best;
    } else {
        agg.jet_k = jet_proportionality(curve).k;
        std::size_t best = 0;
        auto score = [&](std::size_t l) {
            return agg.nu_bar[l] + (agg.jet_k + 1) * diagram.tau(l);
        };
        for (std::size_t l = 1; l < blocks; ++l)
            if (score(l) > score(best)) best = l;
        agg.ell_e = best;
    }
    return agg;
}

ConditionTag check_condition(const LacunarityDiagram& diagram, const ParamCurve& curve,
                             ConditionKind kind) {
    const bool equal_mult = curve.nu1 == curve.nu2;
    if ((kind == ConditionKind::L2a || kind == ConditionKind::L3a) && !equal_mult)
        throw CaseError("L2a/L3a apply to curves with equal multiplicities");
    if ((kind == ConditionKind::L2b || kind == ConditionKind::L3b) && equal_mult)
        throw CaseError("L2b/L3b apply to curves with distinct multiplicities");

    DiagramAggregates agg = aggregates(diagram, curve);
    unsigned k = 0;
    if (equal_mult) {
        JetData jet = jet_proportionality(curve);
        // Fully proportional components leave k unbounded by the jet
        // condition; conditions are evaluated with the saturated order.
        k = jet.fully_proportional
                ? static_cast<unsigned>(std::min(curve.d1, curve.d2) - curve.nu)
                : jet.k;
    }

    ConditionTag tag;
    tag.kind = kind;
    tag.holds = true;

    const std::size_t blocks = diagram.block_count();
    auto fail = [&](std::size_t l, std::size_t lp) {
        tag.holds = false;
        tag.witness = std::make_pair(l, lp);
    };

    switch (kind) {
        case ConditionKind::L1:
            for (std::size_t l = 0; l + 1 < blocks && tag.holds; ++l) {
                if (!(static_cast<unsigned long>(curve.nu) * diagram.degrees[l + 1] >
                      static_cast<unsigned long>(diagram.degrees[l]) * curve.big_d))
                    fail(l, l + 1);
            }
            break;
        case ConditionKind::L2a:
            for (std::size_t l = 0; l + 1 < blocks && tag.holds; ++l) {
                if (!(static_cast<unsigned long>(curve.nu) * diagram.degrees[l + 1] >
                      static_cast<unsigned long>(curve.nu) * diagram.degrees[l] +
                          static_cast<unsigned long>(k + 1) * (diagram.tau(l) - 1)))
                    fail(l, l + 1);
            }
            break;
        case ConditionKind::L2b:
            for (std::size_t l = 0; l + 1 < blocks && tag.holds; ++l) {
                if (!(agg.nu_bar[l + 1] > agg.nu_tilde[l])) fail(l, l + 1);
            }
            break;
        case ConditionKind::L3a:
            for (std::size_t l = 0; l < blocks && tag.holds; ++l) {
                for (std::size_t lp = 0; lp < l && tag.holds; ++lp) {
                    if ((agg.nu_bar[l] % (k + 1)) != (agg.nu_bar[lp] % (k + 1))) continue;
                    if (!(agg.nu_bar[l] > agg.nu_bar[lp] + (k + 1) * (diagram.tau(lp) - 1)))
                        fail(l, lp);
                }
            }
            break;
        case ConditionKind::L3b: {
            const std::size_t modulus =
                curve.nu1 > curve.nu2 ? curve.nu1 - curve.nu2 : curve.nu2 - curve.nu1;
            for (std::size_t l = 0; l < blocks && tag.holds; ++l) {
                for (std::size_t lp = 0; lp < l && tag.holds; ++lp) {
                    if ((agg.nu_bar[l] % modulus) != (agg.nu_bar[lp] % modulus)) continue;
                    if (!(agg.nu_bar[l] > agg.nu_tilde[lp])) fail(l, lp);
                }
            }
            break;
        }
    }
    return tag;
}

ConditionTag pick_condition(const LacunarityDiagram& diagram, const ParamCurve& curve) {
    const bool equal_mult = curve.nu1 == curve.nu2;
    ConditionKind order[3] = {ConditionKind::L1,
                              equal_mult ? ConditionKind::L2a : ConditionKind::L2b,
                              equal_mult ? ConditionKind::L3a : ConditionKind::L3b};
    ConditionTag last;
    for (ConditionKind kind : order) {
        last = check_condition(diagram, curve, kind);
        if (last.holds) return last;
    }
    throw ConditionViolation("no lacunarity condition holds for this diagram",
                             last.witness->first, last.witness->second);
}

LacunarityDiagram reflect_columns(const LacunarityDiagram& diagram) {
    std::vector<ColumnSet> reflected;
    for (std::size_t l = 0; l < diagram.block_count(); ++l) {
        std::vector<long> cols;
        for (long t : diagram.selections[l].values)
            cols.push_back(static_cast<long>(diagram.degrees[l]) + 2 - t);
        std::sort(cols.begin(), cols.end());
        reflected.emplace_back(std::move(cols));
    }
    return LacunarityDiagram::make(diagram.degrees, std::move(reflected));
}

LacunarityDiagram geometric_diagram(unsigned big_d, unsigned tau, unsigned depth,
                                    ColumnSelector selector, std::size_t degree_cap) {
    if (big_d < 1 || depth < 1 || tau < 1)
        throw DomainError("geometric diagram needs D >= 1, tau >= 1, depth >= 1");
    std::vector<unsigned> degrees{0, 1};
    unsigned long n = 1;
    for (unsigned l = 2; l <= depth; ++l) {
        n *= big_d + 1;
        if (n > degree_cap) throw CapacityError("geometric diagram exceeds degree cap");
        degrees.push_back(static_cast<unsigned>(n));
    }
    std::vector<ColumnSet> selections;
    for (unsigned nl : degrees) {
        const long count = std::min<long>(tau, static_cast<long>(nl) + 1);
        const long top = static_cast<long>(nl) + 1;
        std::vector<long> cols;
        switch (selector) {
            case ColumnSelector::Lowest:
                for (long i = 1; i <= count; ++i) cols.push_back(i);
                break;
            case ColumnSelector::Highest:
                for (long i = top - count + 1; i <= top; ++i) cols.push_back(i);
                break;
            case ColumnSelector::Spread:
                if (count == 1) {
                    cols.push_back(1);
                } else {
                    for (long i = 0; i < count; ++i) {
                        long v = 1 + (i * (top - 1)) / (count - 1);
                        if (!cols.empty() && v <= cols.back()) v = cols.back() + 1;
                        cols.push_back(v);
                    }
                }
                break;
        }
        selections.emplace_back(std::move(cols));
    }
    return LacunarityDiagram::make(std::move(degrees), std::move(selections));
}

}  // namespace lacuna
