#pragma once

#include <random>

#include "lacuna/bautin.hpp"
#include "lacuna/bounds.hpp"
#include "lacuna/lacunarity.hpp"

// Deterministic fixture generators shared by the unit and acceptance
// suites. Every generator draws Gaussian-rational coefficients with
// numerators and denominators bounded by 20.
namespace fixtures {

using namespace lacuna;

using Rng = std::mt19937_64;

Rational rnd_rational(Rng& rng, long bound = 20);
Rational rnd_nonzero_rational(Rng& rng, long bound = 20);
ExactComplex rnd_complex(Rng& rng, long bound = 20);
ExactComplex rnd_nonzero_complex(Rng& rng, long bound = 20);

// z^nu (c_0 + c_1 z + ... ), c_0 != 0, degree exactly nu + len - 1.
UniPoly rnd_factored_poly(Rng& rng, unsigned nu, unsigned len);

// nu1 == nu2, alpha_1 a_0 != alpha_0 a_1 (jet order k = 0).
ParamCurve rnd_regular_curve(Rng& rng, unsigned max_nu = 2, unsigned max_extra = 4);
// nu1 == nu2 with prescribed jet-proportionality order k >= 1.
ParamCurve rnd_singular_curve(Rng& rng, unsigned k, unsigned max_nu = 2);
// nu1 != nu2.
ParamCurve rnd_distinct_curve(Rng& rng, unsigned max_nu = 3, unsigned max_extra = 4);
// P1 = mu P2 exactly.
ParamCurve rnd_proportional_curve(Rng& rng, unsigned max_nu = 2, unsigned max_extra = 3);

// Strictly increasing subset of {1, ..., n+1} of the given size.
ColumnSet rnd_columns(Rng& rng, unsigned degree, std::size_t tau);

// Random diagram satisfying L1 for the curve: degrees grow faster than
// D/nu geometrically.
LacunarityDiagram rnd_l1_diagram(Rng& rng, const ParamCurve& curve, std::size_t blocks,
                                 std::size_t max_tau = 3);

// The named example curves of the test suite.
ParamCurve curve_a();  // (z^3, z^2)
ParamCurve curve_b();  // (z(1+z), z(1-z))
ParamCurve curve_c();  // (z(1+z+z^2), z(1+z)), jet order 1
ParamCurve curve_d();  // (2z+2z^2, z+z^2), proportional

LacunarityDiagram diagram_a();  // degree 1, T = {1,2}
LacunarityDiagram diagram_b();  // degrees (1,3), T = ({1,2}, {1,3})

}  // namespace fixtures
