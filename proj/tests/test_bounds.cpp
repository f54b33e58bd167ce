#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"

using namespace lacuna;
namespace fx = fixtures;

namespace {

BoundReport report_for(const ParamCurve& curve, const LacunarityDiagram& diagram) {
    NormalizedCurve nc = normalize_curve(curve, 1.0, 1e-9);
    ConditionTag cond = pick_condition(diagram, curve);
    return zero_bound_report(nc, diagram, cond);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("normalization leaves a curve with unit maximum alone") {
    NormalizedCurve nc = normalize_curve(fx::curve_a(), 1.0, 1e-9);
    CHECK(nc.m_r.lo == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(nc.m_r.hi == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(nc.alpha0_abs.lo == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(nc.a0_abs.hi == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("normalization rescales by the larger component") {
    ParamCurve curve = ParamCurve::make(
        UniPoly{ExactComplex(0), ExactComplex(2)},   // 2z
        UniPoly{ExactComplex(0), ExactComplex(0), ExactComplex(1)});  // z^2
    // Canonical orientation swaps to nu1 = 2.
    NormalizedCurve nc = normalize_curve(curve, 1.0, 1e-9);
    CHECK(nc.m_r.hi == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(nc.a0_abs.lo == doctest::Approx(1.0).epsilon(1e-7));   // 2z / 2
    CHECK(nc.alpha0_abs.hi == doctest::Approx(0.5).epsilon(1e-7));  // z^2 / 2
}

TEST_CASE("sigma_bar with an explicit basis and the case-split bound") {
    CHECK(sigma_bar(1.0, {0, 1, 2, 3, 4}, 4) == doctest::Approx(5.0));
    CHECK(sigma_bar_bound(1.0, 5, 10) == doctest::Approx(5.0));
    CHECK(sigma_bar_bound(0.25, 100, 200) <= 4.0 / 3.0 + 1e-12);
    CHECK(sigma_bar(0.5, {0}, 2) == doctest::Approx(0.25));
    // rho > 1 branch dominates every basis choice inside [0, b].
    CHECK(sigma_bar_bound(2.0, 2, 3) >= sigma_bar(2.0, {0, 1}, 3) * (1 - 1e-12));
    CHECK(sigma_bar_bound(2.0, 2, 3) == doctest::Approx(12.0));
}

TEST_CASE("c estimate") {
    CHECK(c_estimate(1, 0.5, 1.0, 1.0, 3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c_estimate(2, 1.0, 1.0, 1.0, 3) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(c_estimate(2, 0.5, 1.0, 1.0, 3) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(c_estimate(2, 0.0, 1.0, 1.0, 3), DomainError);
}

TEST_CASE("Bernstein zero bounds") {
    BernsteinParams trivial;
    trivial.big_k = 1.0;
    CHECK(bernstein_zero_bound(trivial, 5).count_bound == doctest::Approx(0.0));

    BernsteinParams params;  // b=3, sigma=2, delta=1, B=R=1 specialization
    params.c_est = c_estimate(2, 1.0, 1.0, 1.0, 3);
    params.sigma_bar_val = 4.0 / 3.0;
    ZeroCountBound zb = bernstein_zero_bound(params, 3);
    double expect = 15.0 * std::log(2.0) + 5.0 * std::log(2.0 + 4.0 * std::pow(2.0, 1.5) / 3.0);
    CHECK(zb.count_bound == doctest::Approx(expect).epsilon(1e-9));
    double expect_rho = (1.0 / 512.0) * std::min(0.5, 3.0 / (4.0 * std::pow(2.0, 1.5)));
    CHECK(zb.rho_localization == doctest::Approx(expect_rho).epsilon(1e-9));
    CHECK(zb.rho_localization <= expect_rho);  // rounded down

    BernsteinParams bad;
    bad.alpha = 1.5;
    CHECK_THROWS_AS(bernstein_zero_bound(bad, 1), DomainError);
}

TEST_CASE("the generic-radius Bernstein count dominates the van der Poorten form") {
    // Same data pushed through the explicit-K route: log K / log(5/4) is
    // sharper than the rounded 5-constant estimate.
    double c = c_estimate(2, 1.0, 1.0, 1.0, 3);
    BernsteinParams five;
    five.c_est = c;
    double spec = bernstein_zero_bound(five, 3).count_bound;

    BernsteinParams general;
    general.big_k = std::pow(2.0, 3) * (2.0 + c * (4.0 / 3.0));
    double vdp = bernstein_zero_bound(general, 3).count_bound;
    CHECK(vdp <= spec);
    CHECK(vdp > 0.0);

    BernsteinParams odd;  // off the specialization: general-radius route
    odd.r = 0.3;
    odd.alpha = 0.4;
    odd.c_est = c;
    odd.sigma_bar_val = sigma_bar_bound(0.3 * 0.4, 2, 3);
    double general_count = bernstein_zero_bound(odd, 3).count_bound;
    CHECK(general_count > 0.0);
    CHECK(std::isfinite(general_count));
}

TEST_CASE("closed invariants match the exact elimination on fixture A") {
    ParamCurve curve = fx::curve_a();
    LacunarityDiagram diagram = fx::diagram_a();
    ConditionTag cond = check_condition(diagram, curve, ConditionKind::L1);
    ClosedInvariants inv = closed_invariants(curve, diagram, aggregates(diagram, curve), cond);
    CHECK(inv.case_tag == CaseTag::DistinctMult);
    CHECK(inv.b == 3);
    CHECK(inv.sigma == 2);
    CHECK(inv.delta_lb_sq == Rational(1));
    MatrixStats stats = matrix_stats(assemble_matrix(curve, diagram));
    CHECK(stats.b == inv.b);
    CHECK(stats.sigma == inv.sigma);
    CHECK(stats.delta_sq >= inv.delta_lb_sq);
}

TEST_CASE("closed invariants match the exact elimination on fixture B") {
    ParamCurve curve = fx::curve_b();
    LacunarityDiagram diagram = fx::diagram_b();
    ConditionTag cond = check_condition(diagram, curve, ConditionKind::L1);
    ClosedInvariants inv = closed_invariants(curve, diagram, aggregates(diagram, curve), cond);
    CHECK(inv.case_tag == CaseTag::EqualMult);
    CHECK(inv.b == 4);
    CHECK(inv.sigma == 4);
    MatrixStats stats = matrix_stats(assemble_matrix(curve, diagram));
    CHECK(stats.b == 4);
    CHECK(stats.sigma == 4);
    // C_bar = 2, delta_bar = 2, tau_bar' = 2: delta >= 2 * 2^2 = 8, and the
    // named minor attains it: block determinants 2 and 4.
    CHECK(inv.delta_lb_sq == Rational(64));
    Rational named = named_minor_sq(assemble_matrix(curve, diagram));
    CHECK(named == Rational(64));
    CHECK(named >= inv.delta_lb_sq);
}

TEST_CASE("closed invariants for a proportional curve") {
    ParamCurve curve = fx::curve_d();
    LacunarityDiagram diagram = geometric_diagram(curve.big_d, 2, 2);
    ConditionTag cond = check_condition(diagram, curve, ConditionKind::L1);
    ClosedInvariants inv = closed_invariants(curve, diagram, aggregates(diagram, curve), cond);
    CHECK(inv.case_tag == CaseTag::Proportional);
    CHECK(inv.b == curve.nu * diagram.d);
    CHECK(inv.sigma == 3);
    MatrixStats stats = matrix_stats(assemble_matrix(curve, diagram));
    CHECK(stats.b == inv.b);
    CHECK(stats.sigma == inv.sigma);
}

TEST_CASE("closed forms hold under the modular conditions too") {
    // L3a fixture: jet order 1, degrees 2 and 3, pivot rows interleaved
    // across blocks (2, 4 and 3) but never colliding.
    ParamCurve curve_eq = fx::curve_c();
    LacunarityDiagram d =
        LacunarityDiagram::make({2, 3}, {ColumnSet({1, 2}), ColumnSet({1})});
    ConditionTag l3a = check_condition(d, curve_eq, ConditionKind::L3a);
    REQUIRE(l3a.holds);
    ClosedInvariants inv = closed_invariants(curve_eq, d, aggregates(d, curve_eq), l3a);
    MatrixStats stats = matrix_stats(assemble_matrix(curve_eq, d));
    CHECK(inv.b == 4);  // max(nu n + (k+1)(tau-1)) = max(2+2, 3)
    CHECK(stats.b == inv.b);
    CHECK(stats.sigma == inv.sigma);
    CHECK(named_minor_sq(assemble_matrix(curve_eq, d)) >= inv.delta_lb_sq);

    // L3b fixture: multiplicities 3 and 1, same degrees.
    ParamCurve curve_ne = ParamCurve::make(
        UniPoly{ExactComplex(0), ExactComplex(0), ExactComplex(0), ExactComplex(1)},
        UniPoly{ExactComplex(0), ExactComplex(1)});
    ConditionTag l3b = check_condition(d, curve_ne, ConditionKind::L3b);
    REQUIRE(l3b.holds);
    ClosedInvariants inv2 = closed_invariants(curve_ne, d, aggregates(d, curve_ne), l3b);
    MatrixStats stats2 = matrix_stats(assemble_matrix(curve_ne, d));
    CHECK(inv2.b == 4);  // max nu_tilde = max(2+2, 3)
    CHECK(stats2.b == inv2.b);
    CHECK(stats2.sigma == inv2.sigma);

    // Reports carry the modular condition tag through to the output.
    NormalizedCurve nc = normalize_curve(curve_eq, 1.0, 1e-9);
    BoundReport rep = zero_bound_report(nc, d, l3a);
    CHECK(rep.condition_used == ConditionKind::L3a);
    CHECK_FALSE(rep.z_bound_refined.has_value());  // refinement is L1-only
    CHECK(rep.z_bound >= static_cast<double>(rep.b));
}

TEST_CASE("fixture A report reproduces the pinned numbers") {
    BoundReport rep = report_for(fx::curve_a(), fx::diagram_a());
    CHECK(rep.case_tag == CaseTag::DistinctMult);
    CHECK(rep.b == 3);
    CHECK(rep.sigma == 2);
    double refined = 15.0 * std::log(2.0) + 5.0 * std::log(2.0 + 4.0 * std::pow(2.0, 1.5) / 3.0);
    REQUIRE(rep.z_bound_refined.has_value());
    CHECK(*rep.z_bound_refined == doctest::Approx(refined).epsilon(1e-6));
    CHECK(rep.z_bound_int == 20);
    CHECK(rep.rho_lb == doctest::Approx(5.179e-4).epsilon(1e-3));
    CHECK(rep.rho_lb <= 0.25);
    CHECK(rep.z_bound >= static_cast<double>(rep.b));
}

TEST_CASE("unit initial coefficients contribute no log terms") {
    // |alpha0| = |a0| = 1: the generic distinct-multiplicity bound is
    // 5 (nu_tilde + 1) log 2 + 2.5 (m+1) log m exactly.
    BoundReport rep = report_for(fx::curve_a(), fx::diagram_a());
    double expect = 20.0 * std::log(2.0) + 7.5 * std::log(2.0);
    CHECK(rep.z_bound_generic == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("shrinking the initial coefficients never shrinks the bound") {
    ParamCurve small = ParamCurve::make(
        UniPoly{ExactComplex(0), ExactComplex(0), ExactComplex(0), ExactComplex(Rational(1, 2))},
        UniPoly{ExactComplex(0), ExactComplex(0), ExactComplex(1)});
    BoundReport rep_small = report_for(small, fx::diagram_a());
    BoundReport rep_unit = report_for(fx::curve_a(), fx::diagram_a());
    CHECK(rep_small.z_bound >= rep_unit.z_bound);
    CHECK(rep_small.rho_lb <= rep_unit.rho_lb);
}

TEST_CASE("reports are rejected without a verified condition") {
    ConditionTag failed{ConditionKind::L1, false, std::make_pair<std::size_t>(0, 1)};
    NormalizedCurve nc = normalize_curve(fx::curve_a(), 1.0, 1e-9);
    CHECK_THROWS_AS(zero_bound_report(nc, fx::diagram_a(), failed), DomainError);
}

TEST_CASE("single-parameter families are rejected by the main branch") {
    LacunarityDiagram d = LacunarityDiagram::make({1}, {ColumnSet({1})});
    NormalizedCurve nc = normalize_curve(fx::curve_a(), 1.0, 1e-9);
    ConditionTag cond = check_condition(d, fx::curve_a(), ConditionKind::L1);
    CHECK_THROWS_AS(zero_bound_report(nc, d, cond), DomainError);
}

TEST_CASE("report invariants hold on random conditioned fixtures") {
    fx::Rng rng(307);
    for (int rep = 0; rep < 12; ++rep) {
        ParamCurve curve;
        switch (rep % 3) {
            case 0: curve = fx::rnd_regular_curve(rng, 2, 3); break;
            case 1: curve = fx::rnd_singular_curve(rng, 1); break;
            default: curve = fx::rnd_distinct_curve(rng, 3, 3); break;
        }
        LacunarityDiagram diagram = fx::rnd_l1_diagram(rng, curve, 2);
        if (diagram.m() < 2) continue;
        BoundReport r = report_for(curve, diagram);
        CHECK(r.z_bound >= static_cast<double>(r.b));
        CHECK(r.rho_lb > 0.0);
        CHECK(r.rho_lb <= 0.25);
        CHECK(r.delta_lb > 0.0);
        CHECK(static_cast<double>(r.z_bound_int) >= r.z_bound);
    }
}

}  // TEST_SUITE
