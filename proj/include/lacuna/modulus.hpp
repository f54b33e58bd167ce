#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lacuna/unipoly.hpp"

namespace lacuna {

struct Interval {
    double lo = 0;
    double hi = 0;
};

// Certified enclosure of max_{|z| = radius} |p(z)| (equivalently, by the
// maximum principle, of the max over the closed disc). The result
// satisfies hi - lo <= precision * hi, or ConvergenceError is thrown.
//
// The lower end is attained: it is the best value found by equispaced
// sampling of |p|^2 on the circle (4 deg + 16 seeds) plus golden-section
// refinement around the best seed. The upper end follows from the
// Bernstein inequality for the trigonometric polynomial |p(R e^{i t})|^2.
Interval max_modulus_on_circle(const UniPoly& p, double radius, double precision);

// Same enclosure machinery for the minimum of |v| on the circle, used to
// keep rational denominators away from zero.
Interval min_modulus_on_circle(const UniPoly& v, double radius, double precision);

// Argument-principle count of the zeros of the polynomial (coefficients
// by increasing power) strictly inside |z| < radius: the winding number
// of its image of the circle around 0. Returns nullopt when |p| comes too
// close to zero on the circle for the count to be trusted.
std::optional<long> winding_number_on_circle(const std::vector<std::complex<double>>& coeffs,
                                             double radius);

}  // namespace lacuna
