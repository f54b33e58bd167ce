#include "fixtures.hpp"

#include <algorithm>

namespace fixtures {

Rational rnd_rational(Rng& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Rational rnd_nonzero_rational(Rng& rng, long bound) {
    Rational q;
    do {
        q = rnd_rational(rng, bound);
    } while (q == 0);
    return q;
}

ExactComplex rnd_complex(Rng& rng, long bound) {
    Rational re = rnd_rational(rng, bound);
    Rational im = rnd_rational(rng, bound);
    return {re, im};
}

ExactComplex rnd_nonzero_complex(Rng& rng, long bound) {
    ExactComplex z;
    do {
        z = rnd_complex(rng, bound);
    } while (z.is_zero());
    return z;
}

UniPoly rnd_factored_poly(Rng& rng, unsigned nu, unsigned len) {
    std::vector<ExactComplex> coeffs(nu + len);
    coeffs[nu] = rnd_nonzero_complex(rng);
    for (unsigned i = 1; i + 1 < len + 1; ++i) coeffs[nu + i] = rnd_complex(rng);
    if (len > 1) coeffs[nu + len - 1] = rnd_nonzero_complex(rng);
    return UniPoly(std::move(coeffs));
}

ParamCurve rnd_regular_curve(Rng& rng, unsigned max_nu, unsigned max_extra) {
    for (;;) {
        unsigned nu = 1 + rng() % max_nu;
        unsigned len1 = 1 + rng() % (max_extra + 1);
        unsigned len2 = 1 + rng() % (max_extra + 1);
        ParamCurve c = ParamCurve::make(rnd_factored_poly(rng, nu, len1),
                                        rnd_factored_poly(rng, nu, len2));
        ExactComplex wronskian = c.alpha_at(1) * c.a_at(0) - c.alpha_at(0) * c.a_at(1);
        if (!wronskian.is_zero()) return c;
    }
}

ParamCurve rnd_singular_curve(Rng& rng, unsigned k, unsigned max_nu) {
    unsigned nu = 1 + rng() % max_nu;
    ExactComplex mu = rnd_nonzero_complex(rng, 6);
    unsigned len2 = k + 2 + rng() % 2;  // a_0 .. a_{len2-1}
    std::vector<ExactComplex> a(len2);
    a[0] = rnd_nonzero_complex(rng, 6);
    for (unsigned i = 1; i < len2; ++i) a[i] = rnd_complex(rng, 6);
    // alpha agrees with mu*a through index k and breaks at k+1.
    unsigned len1 = k + 2 + rng() % 2;
    std::vector<ExactComplex> alpha(len1);
    for (unsigned i = 0; i <= k && i < len1; ++i)
        alpha[i] = mu * (i < len2 ? a[i] : ExactComplex(0));
    ExactComplex base = k + 1 < len2 ? a[k + 1] : ExactComplex(0);
    alpha[k + 1] = mu * base + rnd_nonzero_complex(rng, 6);
    for (unsigned i = k + 2; i < len1; ++i) alpha[i] = rnd_complex(rng, 6);

    std::vector<ExactComplex> p1(nu + len1), p2(nu + len2);
    std::copy(alpha.begin(), alpha.end(), p1.begin() + nu);
    std::copy(a.begin(), a.end(), p2.begin() + nu);
    return ParamCurve::make(UniPoly(std::move(p1)), UniPoly(std::move(p2)));
}

ParamCurve rnd_distinct_curve(Rng& rng, unsigned max_nu, unsigned max_extra) {
    unsigned nu2 = 1 + rng() % (max_nu - 1);
    unsigned nu1 = nu2 + 1 + rng() % (max_nu - nu2);
    unsigned len1 = 1 + rng() % (max_extra + 1);
    unsigned len2 = 1 + rng() % (max_extra + 1);
    return ParamCurve::make(rnd_factored_poly(rng, nu1, len1),
                            rnd_factored_poly(rng, nu2, len2));
}

ParamCurve rnd_proportional_curve(Rng& rng, unsigned max_nu, unsigned max_extra) {
    unsigned nu = 1 + rng() % max_nu;
    unsigned len = 1 + rng() % (max_extra + 1);
    UniPoly p2 = rnd_factored_poly(rng, nu, len);
    ExactComplex mu = rnd_nonzero_complex(rng, 6);
    return ParamCurve::make(mu * p2, p2);
}

ColumnSet rnd_columns(Rng& rng, unsigned degree, std::size_t tau) {
    tau = std::min<std::size_t>(tau, degree + 1);
    std::vector<long> all(degree + 1);
    for (unsigned i = 0; i <= degree; ++i) all[i] = i + 1;
    for (std::size_t i = 0; i < all.size(); ++i) std::swap(all[i], all[rng() % all.size()]);
    std::vector<long> pick(all.begin(), all.begin() + tau);
    std::sort(pick.begin(), pick.end());
    return ColumnSet(std::move(pick));
}

LacunarityDiagram rnd_l1_diagram(Rng& rng, const ParamCurve& curve, std::size_t blocks,
                                 std::size_t max_tau) {
    std::vector<unsigned> degrees;
    std::vector<ColumnSet> selections;
    unsigned n = rng() % 2;  // start at 0 or 1
    for (std::size_t l = 0; l < blocks; ++l) {
        degrees.push_back(n);
        selections.push_back(rnd_columns(rng, n, 1 + rng() % max_tau));
        // next degree strictly above n D / nu
        unsigned next = (n * curve.big_d) / curve.nu + 1 + rng() % 2;
        n = std::max(next, n + 1);
    }
    return LacunarityDiagram::make(std::move(degrees), std::move(selections));
}

namespace {
ExactComplex one() { return ExactComplex(1); }
ExactComplex zero() { return ExactComplex(0); }
}  // namespace

ParamCurve curve_a() {
    return ParamCurve::make(UniPoly{zero(), zero(), zero(), one()},
                            UniPoly{zero(), zero(), one()});
}

ParamCurve curve_b() {
    return ParamCurve::make(UniPoly{zero(), one(), one()},
                            UniPoly{zero(), one(), ExactComplex(-1)});
}

ParamCurve curve_c() {
    return ParamCurve::make(UniPoly{zero(), one(), one(), one()},
                            UniPoly{zero(), one(), one()});
}

ParamCurve curve_d() {
    return ParamCurve::make(UniPoly{zero(), ExactComplex(2), ExactComplex(2)},
                            UniPoly{zero(), one(), one()});
}

LacunarityDiagram diagram_a() {
    return LacunarityDiagram::make({1}, {ColumnSet({1, 2})});
}

LacunarityDiagram diagram_b() {
    return LacunarityDiagram::make({1, 3}, {ColumnSet({1, 2}), ColumnSet({1, 3})});
}

}  // namespace fixtures
