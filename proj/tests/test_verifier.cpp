#include <doctest.h>

#include <complex>

#include "fixtures.hpp"
#include "lacuna/verifier.hpp"

using namespace lacuna;
namespace fx = fixtures;

namespace {

using C = std::complex<double>;

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("root counting in discs") {
    // z^2 (z - 1): double root at the origin, simple root outside.
    RootCount rc1 = roots_in_disc({C(0), C(0), C(-1), C(1)}, 0.25, 1e-7);
    CHECK(rc1.certified);
    CHECK(rc1.count == 2);

    // z^2 - (1/100)^2: both roots inside.
    RootCount rc2 = roots_in_disc({C(-1e-4), C(0), C(1)}, 0.25, 1e-7);
    CHECK(rc2.certified);
    CHECK(rc2.count == 2);

    // Root exactly on the boundary: not certified.
    RootCount rc3 = roots_in_disc({C(-0.25), C(1)}, 0.25, 1e-7);
    CHECK_FALSE(rc3.certified);

    CHECK_THROWS_AS(roots_in_disc({C(0), C(0)}, 0.25, 1e-7), DomainError);
}

TEST_CASE("root counts agree with construction on random products") {
    fx::Rng rng(401);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int rep = 0; rep < 25; ++rep) {
        std::size_t n = 2 + rng() % 6;
        std::vector<C> roots;
        std::size_t inside = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = mag(rng);
            if (std::abs(r - 0.25) < 1e-3) r += 5e-3;  // stay off the test circle
            if (r <= 0.25) ++inside;
            roots.push_back(std::polar(r, angle(rng)));
        }
        std::vector<C> poly{C(1)};
        for (const C& root : roots) {
            std::vector<C> next(poly.size() + 1);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k] * (-root);
                next[k + 1] += poly[k];
            }
            poly = std::move(next);
        }
        RootCount rc = roots_in_disc(poly, 0.25, 1e-9);
        CHECK(rc.certified);
        CHECK(rc.count == inside);
    }
}

TEST_CASE("multiplicity witness of fixture A") {
    BautinMatrix m = assemble_matrix(fx::curve_a(), fx::diagram_a());
    LambdaSample w = multiplicity_witness(m);
    CHECK(std::abs(w.values[0]) == doctest::Approx(0.0));
    CHECK(std::abs(w.values[1]) == doctest::Approx(1.0));
}

TEST_CASE("multiplicity witness of the fixture B diagram has valuation 4") {
    BautinMatrix m = assemble_matrix(fx::curve_b(), fx::diagram_b());
    CHECK_NOTHROW(multiplicity_witness(m));  // internal exact valuation check is b = 4
    CHECK(matrix_stats(m).b == 4);
}

TEST_CASE("proportional curves have no one-dimensional witness") {
    ParamCurve curve = fx::curve_d();
    LacunarityDiagram diagram = geometric_diagram(curve.big_d, 2, 2);
    BautinMatrix m = assemble_matrix(curve, diagram);
    CHECK_THROWS_AS(multiplicity_witness(m), StructureError);
}

TEST_CASE("witness valuation equals the closed-form index on random fixtures") {
    fx::Rng rng(419);
    for (int rep = 0; rep < 8; ++rep) {
        ParamCurve curve = rep % 2 == 0 ? fx::rnd_regular_curve(rng, 2, 2)
                                        : fx::rnd_distinct_curve(rng, 3, 2);
        LacunarityDiagram diagram = fx::rnd_l1_diagram(rng, curve, 2);
        BautinMatrix m = assemble_matrix(curve, diagram);
        // multiplicity_witness throws if the exact valuation differs from b.
        CHECK_NOTHROW(multiplicity_witness(m));
    }
}

TEST_CASE("verification run on fixture A stays within the bounds") {
    ParamCurve curve = fx::curve_a();
    LacunarityDiagram diagram = fx::diagram_a();
    NormalizedCurve nc = normalize_curve(curve, 1.0, 1e-9);
    ConditionTag cond = check_condition(diagram, curve, ConditionKind::L1);
    BoundReport report = zero_bound_report(nc, diagram, cond);
    VerificationRun run = verify_run(nc, diagram, report, 200, 7);
    CHECK(run.passed());
    CHECK(run.samples == 200);
    CHECK(run.max_count_quarter <= 3);  // the only roots are 0 (double) and -l1/l2
    CHECK(run.max_count_rho <= report.b);
    CHECK(run.witness_multiplicity == 3);
    CHECK(run.skipped < 20);
}

TEST_CASE("verification runs are deterministic in the seed") {
    ParamCurve curve = fx::curve_b();
    LacunarityDiagram diagram = fx::diagram_b();
    NormalizedCurve nc = normalize_curve(curve, 1.0, 1e-9);
    ConditionTag cond = check_condition(diagram, curve, ConditionKind::L1);
    BoundReport report = zero_bound_report(nc, diagram, cond);
    VerificationRun a = verify_run(nc, diagram, report, 60, 99);
    VerificationRun b = verify_run(nc, diagram, report, 60, 99);
    CHECK(a.max_count_quarter == b.max_count_quarter);
    CHECK(a.max_count_rho == b.max_count_rho);
    CHECK(a.skipped == b.skipped);
    CHECK(a.violations.size() == b.violations.size());
    VerificationRun c = verify_run(nc, diagram, report, 60, 100);
    CHECK(a.passed());
    CHECK(c.passed());
}

TEST_CASE("an empty run passes") {
    ParamCurve curve = fx::curve_a();
    LacunarityDiagram diagram = fx::diagram_a();
    NormalizedCurve nc = normalize_curve(curve, 1.0, 1e-9);
    ConditionTag cond = check_condition(diagram, curve, ConditionKind::L1);
    BoundReport report = zero_bound_report(nc, diagram, cond);
    VerificationRun run = verify_run(nc, diagram, report, 0, 1);
    CHECK(run.passed());
    CHECK(run.samples == 0);
}

}  // TEST_SUITE
