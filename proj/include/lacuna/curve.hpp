#pragma once

#include <optional>

#include "lacuna/unipoly.hpp"

namespace lacuna {

// A plane curve z -> (P1(z), P2(z)), optionally divided by a common
// denominator V. Construction enforces the canonical orientation
// nu1 >= nu2 by swapping the components if needed (recorded in
// `swapped`), factors out the multiplicities
//   P1 = z^nu1 (alpha_0 + alpha_1 z + ...),
//   P2 = z^nu2 (a_0 + a_1 z + ...),
// and validates alpha_0 != 0, a_0 != 0, P(0) = 0, and for rational
// curves gcd(P_i, V) = 1 with V(0) = beta_0 != 0.
struct ParamCurve {
    UniPoly p1, p2;
    std::optional<UniPoly> v;

    unsigned d1 = 0, d2 = 0, big_d = 0;  // D1, D2, D = max
    unsigned nu1 = 0, nu2 = 0, nu = 0;   // nu = nu2 after the swap

    std::vector<ExactComplex> alpha;  // alpha_0 .. alpha_{D1-nu1}
    std::vector<ExactComplex> a;      // a_0 .. a_{D2-nu2}
    std::optional<ExactComplex> beta0;
    bool swapped = false;

    static ParamCurve make(UniPoly p1, UniPoly p2, std::optional<UniPoly> v = std::nullopt);

    bool is_rational() const { return v.has_value(); }

    // Coefficients above the degree read as zero.
    const ExactComplex& alpha_at(std::size_t i) const {
        static const ExactComplex zero{};
        return i < alpha.size() ? alpha[i] : zero;
    }
    const ExactComplex& a_at(std::size_t i) const {
        static const ExactComplex zero{};
        return i < a.size() ? a[i] : zero;
    }
};

// P1^i P2^j as an exact polynomial. Requires a polynomial curve (no
// denominator); the result's valuation is i*nu1 + j*nu2.
UniPoly compose_monomial(const ParamCurve& curve, unsigned long i_exp, unsigned long j_exp,
                         std::size_t degree_cap = kDefaultDegreeCap);

// Jet proportionality data at the origin: mu = alpha_0/a_0 and the largest
// k with (alpha_0..alpha_k) = mu (a_0..a_k), coefficient lists extended by
// zeros above the degrees. When the extended lists agree everywhere the
// curve components are exactly proportional and delta_bar_k is absent;
// otherwise delta_bar_k = alpha_{k+1} - mu a_{k+1} != 0.
struct JetData {
    unsigned k = 0;
    ExactComplex mu;
    bool fully_proportional = false;
    std::optional<ExactComplex> delta_bar_k;
};

JetData jet_proportionality(const ParamCurve& curve);

}  // namespace lacuna
