#include <doctest.h>

#include "fixtures.hpp"
#include "lacuna/modulus.hpp"

using namespace lacuna;
namespace fx = fixtures;

namespace {

UniPoly ipoly(std::initializer_list<long> coeffs) {
    std::vector<ExactComplex> v;
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_SUITE("poly_core") {

TEST_CASE("exact complex arithmetic round-trips through evaluation") {
    fx::Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        UniPoly p = fx::rnd_factored_poly(rng, 0, 4);
        UniPoly q = fx::rnd_factored_poly(rng, 0, 3);
        ExactComplex z0 = fx::rnd_complex(rng);
        CHECK((p * q).eval(z0) == p.eval(z0) * q.eval(z0));
        CHECK((p + q).eval(z0) == p.eval(z0) + q.eval(z0));
    }
}

TEST_CASE("inverse is exact") {
    ExactComplex z(Rational(3, 4), Rational(-2, 7));
    CHECK(z * z.inverse() == ExactComplex(1));
    CHECK_THROWS_AS(ExactComplex(0).inverse(), DomainError);
}

TEST_CASE("compose_monomial identity case returns the component") {
    ParamCurve c = fx::curve_a();
    CHECK(compose_monomial(c, 0, 1) == c.p2);
    CHECK(compose_monomial(c, 1, 0) == c.p1);
}

TEST_CASE("compose_monomial on (z(1+z), z(1-z))") {
    ParamCurve c = fx::curve_b();
    CHECK(compose_monomial(c, 1, 1) == ipoly({0, 0, 1, 0, -1}));   // z^2 - z^4
    CHECK(compose_monomial(c, 2, 0) == ipoly({0, 0, 1, 2, 1}));    // z^2 + 2z^3 + z^4
}

TEST_CASE("compose_monomial valuation is i nu1 + j nu2") {
    fx::Rng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        ParamCurve c = fx::rnd_distinct_curve(rng);
        unsigned long i = rng() % 3, j = rng() % 3;
        if (i + j == 0) i = 1;
        auto [val, low] = trailing_data(compose_monomial(c, i, j));
        CHECK(val == i * c.nu1 + j * c.nu2);
        CHECK(!low.is_zero());
    }
}

TEST_CASE("compose_monomial honours the degree cap") {
    ParamCurve c = fx::curve_a();
    CHECK_THROWS_AS(compose_monomial(c, 1000, 1000, 100), CapacityError);
}

TEST_CASE("series inversion of simple denominators") {
    UniPoly v{ExactComplex(1), ExactComplex(1)};  // 1 + z
    auto geo = series_inverse_power(v, 1, 3);
    CHECK(geo == std::vector<ExactComplex>{ExactComplex(1), ExactComplex(-1), ExactComplex(1),
                                           ExactComplex(-1)});
    auto sq = series_inverse_power(v, 2, 3);
    CHECK(sq == std::vector<ExactComplex>{ExactComplex(1), ExactComplex(-2), ExactComplex(3),
                                          ExactComplex(-4)});
    auto constant = series_inverse_power(UniPoly{ExactComplex(2)}, 3, 1);
    CHECK(constant ==
          std::vector<ExactComplex>{ExactComplex(Rational(1, 8)), ExactComplex(0)});
}

TEST_CASE("series inversion times V^n is exactly 1") {
    fx::Rng rng(37);
    for (int rep = 0; rep < 10; ++rep) {
        UniPoly v = fx::rnd_factored_poly(rng, 0, 4);
        unsigned long n = 1 + rng() % 3;
        std::size_t order = 6;
        auto s = series_inverse_power(v, n, order);
        UniPoly vs = v.pow(n) * UniPoly(std::vector<ExactComplex>(s));
        CHECK(vs.coeff(0) == ExactComplex(1));
        for (std::size_t k = 1; k <= order; ++k) CHECK(vs.coeff(k).is_zero());
    }
}

TEST_CASE("series inversion rejects v(0) = 0") {
    CHECK_THROWS_AS(series_inverse_power(ipoly({0, 1}), 1, 3), SingularDenominatorError);
}

TEST_CASE("trailing data") {
    CHECK(trailing_data(ipoly({0, 0, 1, 0, -1})) ==
          std::pair<std::size_t, ExactComplex>{2, ExactComplex(1)});
    CHECK(trailing_data(ipoly({0, 0, 0, 0, 0, 3})) ==
          std::pair<std::size_t, ExactComplex>{5, ExactComplex(3)});
    CHECK_THROWS_AS(trailing_data(UniPoly{}), DomainError);
}

TEST_CASE("max modulus on circles") {
    Interval i1 = max_modulus_on_circle(ipoly({0, 1}), 2.0, 1e-9);
    CHECK(i1.lo <= 2.0);
    CHECK(i1.hi >= 2.0);
    CHECK(i1.hi - i1.lo <= 1e-9 * i1.hi);

    Interval i2 = max_modulus_on_circle(ipoly({0, 1, 1}), 1.0, 1e-9);  // max 2 at z=1
    CHECK(i2.lo <= 2.0);
    CHECK(i2.hi >= 2.0);
    CHECK(i2.hi - i2.lo <= 1e-9 * i2.hi);

    Interval i3 = max_modulus_on_circle(ipoly({1}), 0.5, 1e-9);
    CHECK(i3.lo <= 1.0);
    CHECK(i3.hi >= 1.0);
}

TEST_CASE("max modulus interval dominates dense sampling") {
    fx::Rng rng(53);
    for (int rep = 0; rep < 5; ++rep) {
        UniPoly p = fx::rnd_factored_poly(rng, rng() % 2, 5);
        double radius = 0.25 + 0.5 * static_cast<double>(rng() % 4);
        Interval enc = max_modulus_on_circle(p, radius, 1e-7);
        std::vector<std::complex<double>> c(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) c[k] = p.coeff(k).to_complex();
        double best = 0;
        for (int j = 0; j < 10000; ++j) {
            std::complex<double> z = std::polar(radius, 2 * 3.14159265358979 * j / 10000.0);
            std::complex<double> acc{0, 0};
            for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
            best = std::max(best, std::abs(acc));
        }
        CHECK(enc.hi >= best * (1 - 1e-9));
        // The attained lower end may exceed the coarse sampled maximum by
        // at most the Bernstein gap of the 10^4-point grid.
        CHECK(enc.lo <= best * (1 + 1e-5));
    }
}

TEST_CASE("curve construction validates and canonicalizes") {
    // P1 lower multiplicity than P2: the constructor swaps.
    ParamCurve c = ParamCurve::make(ipoly({0, 0, 1}), ipoly({0, 0, 0, 1}));
    CHECK(c.swapped);
    CHECK(c.nu1 == 3);
    CHECK(c.nu2 == 2);
    CHECK_THROWS_AS(ParamCurve::make(ipoly({1, 1}), ipoly({0, 1})), DomainError);
    CHECK_THROWS_AS(ParamCurve::make(UniPoly{}, ipoly({0, 1})), DomainError);
    // Denominator sharing a root with P1 is rejected.
    CHECK_THROWS_AS(ParamCurve::make(ipoly({0, 1, 1}), ipoly({0, 1}), ipoly({1, 1})),
                    DomainError);
    CHECK_THROWS_AS(ParamCurve::make(ipoly({0, 1}), ipoly({0, 0, 1}), ipoly({0, 1})),
                    SingularDenominatorError);
}

}  // TEST_SUITE
