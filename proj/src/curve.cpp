#include "lacuna/curve.hpp"

namespace lacuna {

ParamCurve ParamCurve::make(UniPoly p1, UniPoly p2, std::optional<UniPoly> v) {
    if (p1.is_zero() || p2.is_zero())
        throw DomainError("curve components must be nonzero polynomials");

    auto [val1, low1] = trailing_data(p1);
    auto [val2, low2] = trailing_data(p2);
    if (val1 < 1 || val2 < 1)
        throw DomainError("curve must pass through the origin: P1(0) = P2(0) = 0");

    ParamCurve c;
    c.swapped = val1 < val2;
    if (c.swapped) std::swap(p1, p2), std::swap(val1, val2);
    c.p1 = std::move(p1);
    c.p2 = std::move(p2);
    c.nu1 = static_cast<unsigned>(val1);
    c.nu2 = static_cast<unsigned>(val2);
    c.nu = c.nu2;
    c.d1 = static_cast<unsigned>(c.p1.degree());
    c.d2 = static_cast<unsigned>(c.p2.degree());
    c.big_d = std::max(c.d1, c.d2);

    c.alpha.resize(c.d1 - c.nu1 + 1);
    for (std::size_t i = 0; i < c.alpha.size(); ++i) c.alpha[i] = c.p1.coeff(c.nu1 + i);
    c.a.resize(c.d2 - c.nu2 + 1);
    for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = c.p2.coeff(c.nu2 + i);

    if (v.has_value()) {
        if (v->is_zero() || v->coeff(0).is_zero())
            throw SingularDenominatorError("denominator must satisfy V(0) != 0");
        if (poly_gcd(c.p1, *v).degree() != 0 || poly_gcd(c.p2, *v).degree() != 0)
            throw DomainError("denominator must be coprime to both components");
        c.beta0 = v->coeff(0);
        c.v = std::move(v);
    }
    return c;
}

UniPoly compose_monomial(const ParamCurve& curve, unsigned long i_exp, unsigned long j_exp,
                         std::size_t degree_cap) {
    if (curve.is_rational())
        throw DomainError("compose_monomial needs a polynomial curve");
    std::size_t slots = i_exp * curve.d1 + j_exp * curve.d2 + 1;
    if (slots > degree_cap)
        throw CapacityError("composition needs " + std::to_string(slots) +
                            " coefficient slots, cap is " + std::to_string(degree_cap));
    return curve.p1.pow(i_exp, degree_cap) * curve.p2.pow(j_exp, degree_cap);
}

JetData jet_proportionality(const ParamCurve& curve) {
    JetData jet;
    jet.mu = curve.alpha[0] / curve.a[0];
    std::size_t len = std::max(curve.alpha.size(), curve.a.size());
    std::size_t k = 0;
    while (k + 1 < len && curve.alpha_at(k + 1) == jet.mu * curve.a_at(k + 1)) ++k;
    jet.k = static_cast<unsigned>(k);
    if (k + 1 == len && curve.nu1 == curve.nu2) {
        jet.fully_proportional = true;
    } else if (k + 1 < len) {
        jet.delta_bar_k = curve.alpha_at(k + 1) - jet.mu * curve.a_at(k + 1);
    } else {
        // nu1 != nu2 with proportional tails: the jet order saturates but
        // the curve is not proportional as a pair of polynomials.
        jet.fully_proportional = false;
    }
    return jet;
}

}  // namespace lacuna
