#pragma once

#include <optional>
#include <utility>

#include "lacuna/combinatorics.hpp"
#include "lacuna/curve.hpp"

namespace lacuna {

// The lacunarity diagram of the family Q_lambda: the increasing degrees
// n_0 < ... < n_{l_d} = d of its homogeneous parts together with the
// selected columns T_l in {1, ..., n_l + 1} (column t stands for the
// monomial X^{t-1} Y^{n_l - (t-1)}).
struct LacunarityDiagram {
    unsigned d = 0;
    std::vector<unsigned> degrees;
    std::vector<ColumnSet> selections;

    static LacunarityDiagram make(std::vector<unsigned> degrees,
                                  std::vector<ColumnSet> selections);

    std::size_t block_count() const { return degrees.size(); }
    std::size_t ell_d() const { return degrees.size() - 1; }
    // Total parameter count m = sum of tau_l.
    std::size_t m() const;
    std::size_t tau(std::size_t ell) const { return selections[ell].size(); }
};

enum class ConditionKind { L1, L2a, L2b, L3a, L3b };

const char* condition_name(ConditionKind kind);

struct ConditionTag {
    ConditionKind kind = ConditionKind::L1;
    bool holds = false;
    // First violated pair of block indices when holds == false.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// The aggregate quantities of the diagram relative to a curve.
struct DiagramAggregates {
    std::vector<std::size_t> nu_bar;    // (t_{l,1}-1) nu1 + (n_l - (t_{l,1}-1)) nu2
    std::vector<std::size_t> nu_tilde;  // same with the last column t_{l,tau_l}
    std::vector<std::size_t> t_bar_ell;
    std::size_t t_bar = 0;
    std::size_t t_bar_prime1 = 0;  // sum of first columns t_{l,1}
    std::size_t n_bar = 0;
    std::size_t tau_n_bar = 0;
    std::size_t tau_bar = 0;        // sum tau_l (tau_l + 1) / 2
    std::size_t tau_bar_prime = 0;  // sum tau_l (tau_l - 1) / 2
    std::vector<Rational> c_ell;
    Rational c_bar = 1;
    std::size_t ell_e = 0;  // argmax block, multiplicity-case dependent
    unsigned jet_k = 0;     // the k used for ell_e in the equal-multiplicity case
};

DiagramAggregates aggregates(const LacunarityDiagram& diagram, const ParamCurve& curve);

// Exact evaluation of the requested sparsity condition. L2a/L3a require
// nu1 == nu2 and L2b/L3b require nu1 != nu2 (CaseError otherwise); L1
// applies to both cases.
ConditionTag check_condition(const LacunarityDiagram& diagram, const ParamCurve& curve,
                             ConditionKind kind);

// Picks the first condition from {L1, L2, L3} (in the multiplicity case
// of the curve) that holds; throws ConditionViolation when none does.
ConditionTag pick_condition(const LacunarityDiagram& diagram, const ParamCurve& curve);

// Exchanging the roles of X and Y sends column t of a degree-n_l block
// to column n_l + 2 - t. Needed when the curve components were swapped
// into the canonical orientation nu1 >= nu2.
LacunarityDiagram reflect_columns(const LacunarityDiagram& diagram);

enum class ColumnSelector { Lowest, Highest, Spread };

// Degrees 0, 1, (D+1), (D+1)^2, ..., (D+1)^{depth-1}; block l selects
// min(tau, n_l + 1) columns by the given rule. Satisfies L1 for every
// curve of degree D with nu >= 1.
LacunarityDiagram geometric_diagram(unsigned big_d, unsigned tau, unsigned depth,
                                    ColumnSelector selector = ColumnSelector::Lowest,
                                    std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace lacuna
