#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "lacuna/bautin.hpp"
#include "lacuna/bounds.hpp"

namespace lacuna {

struct RootCount {
    std::size_t count = 0;
    bool certified = false;
};

// Number of roots with |z| <= radius, multiplicity by cluster merging.
// Certified when no root lies within boundary_margin of the circle and an
// independent argument-principle count over the circle agrees. Throws
// ConvergenceError when the simultaneous iteration stalls.
RootCount roots_in_disc(std::vector<std::complex<double>> coeffs, double radius,
                        double boundary_margin);

// All roots of a double-coefficient polynomial by Aberth-Ehrlich
// simultaneous iteration, seeded from the Newton polygon of the
// coefficient moduli.
std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> coeffs);

enum class SampleStrategy { UniformSphere, Coordinate, WitnessPerturbed };

struct LambdaSample {
    std::vector<std::complex<double>> values;
    SampleStrategy strategy = SampleStrategy::UniformSphere;
};

// The parameter direction lambda* spanning the kernel of the rows
// 0..b-1: f_{lambda*} has trailing valuation exactly b (asserted in exact
// arithmetic before the conversion to doubles). Requires non-proportional
// components, otherwise the kernel is not a line.
LambdaSample multiplicity_witness(const BautinMatrix& matrix);

struct VerificationRun {
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::size_t max_count_quarter = 0;
    std::size_t max_count_rho = 0;
    std::size_t witness_multiplicity = 0;

    struct Violation {
        std::size_t sample = 0;
        std::string where;
        std::size_t count = 0;
    };
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

// Samples parameters (80% uniform sphere, 10% coordinate vectors, 10%
// perturbed witness), composes f_lambda in doubles and compares certified
// root counts in the 1/4-disc and the rho-disc against the report.
// Deterministic for a fixed seed.
VerificationRun verify_run(const NormalizedCurve& curve, const LacunarityDiagram& diagram,
                           const BoundReport& report, std::size_t n_samples,
                           std::uint64_t seed);

}  // namespace lacuna
