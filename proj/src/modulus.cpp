#include "lacuna/modulus.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace lacuna {

namespace {

double nudge_up(double x) {
    return std::nextafter(std::nextafter(x, HUGE_VAL), HUGE_VAL);
}
double nudge_down(double x) {
    return std::nextafter(std::nextafter(x, -HUGE_VAL), -HUGE_VAL);
}

struct CircleEval {
    std::vector<std::complex<double>> c;
    double radius;

    double abs_sq(double theta) const {
        std::complex<double> z = std::polar(radius, theta);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
        return std::norm(acc);
    }
};

double golden_refine(const CircleEval& f, double lo, double hi, bool maximize, int iters) {
    constexpr double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f.abs_sq(x1), f2 = f.abs_sq(x2);
    for (int i = 0; i < iters; ++i) {
        bool keep_left = maximize ? (f1 > f2) : (f1 < f2);
        if (keep_left) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f.abs_sq(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f.abs_sq(x2);
        }
    }
    return maximize ? std::max(f1, f2) : std::min(f1, f2);
}

Interval extremum_on_circle(const UniPoly& p, double radius, double precision, bool maximize) {
    if (radius <= 0) throw DomainError("circle radius must be positive");
    if (p.is_zero()) return {0.0, 0.0};

    CircleEval f;
    f.radius = radius;
    f.c.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) f.c[k] = p.coeff(k).to_complex();
    const std::size_t n = static_cast<std::size_t>(p.degree());

    if (n == 0) {
        double v = std::abs(f.c[0]);
        return {nudge_down(v), nudge_up(v)};
    }

    const double two_pi = 2.0 * std::numbers::pi;
    // |p|^2 on the circle is a trigonometric polynomial of degree n; at an
    // interior extremum theta*, |g(theta_j) - g(theta*)| <= n^2 M h^2 / 2
    // for the nearest sample, by Bernstein applied twice. Pick N so this
    // slack stays under the requested relative precision.
    std::size_t N = 4 * n + 16;
    double target = std::max(precision, 64 * std::numeric_limits<double>::epsilon());
    {
        double needed = n * std::numbers::pi / std::sqrt(target);
        if (needed > static_cast<double>(N)) N = static_cast<std::size_t>(needed) + 1;
    }

    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        if (N > 200'000'000)
            throw ConvergenceError("circle sampling budget exhausted");
        double best = f.abs_sq(0.0);
        std::size_t best_j = 0;
        for (std::size_t j = 1; j < N; ++j) {
            double v = f.abs_sq(two_pi * static_cast<double>(j) / static_cast<double>(N));
            if (maximize ? (v > best) : (v < best)) best = v, best_j = j;
        }
        double h = two_pi / static_cast<double>(N);
        double theta = h * static_cast<double>(best_j);
        double attained = golden_refine(f, theta - h, theta + h, maximize, 80);
        attained = maximize ? std::max(attained, best) : std::min(attained, best);

        // Sampled extremum vs true extremum, in the squared quantity.
        double q = 0.5 * std::pow(static_cast<double>(n) * std::numbers::pi / static_cast<double>(N), 2);
        if (q >= 0.5) continue;
        // Horner slop on |p|^2: generous relative pad.
        double pad = 1.0 + 1e-13 * static_cast<double>(n + 4);
        Interval out;
        if (maximize) {
            out.lo = nudge_down(std::sqrt(attained) / pad);
            out.hi = nudge_up(std::sqrt(best * pad / (1.0 - q)));
        } else {
            // min g^2 >= sampled_min - (n^2 h^2 / 2) max g^2; bound max by
            // the coefficient l1 norm.
            double coeff_bound = 0.0, rp = 1.0;
            for (std::size_t k = 0; k < f.c.size(); ++k, rp *= radius)
                coeff_bound += std::abs(f.c[k]) * rp;
            double floor_sq = best - 2.0 * q * coeff_bound * coeff_bound;
            out.lo = floor_sq <= 0 ? 0.0 : nudge_down(std::sqrt(floor_sq) / pad);
            out.hi = nudge_up(std::sqrt(attained * pad));
        }
        if (out.hi <= 0) return out;
        if ((out.hi - out.lo) <= precision * out.hi) return out;
    }
    throw ConvergenceError("circle extremum did not reach the requested precision");
}

}  // namespace

Interval max_modulus_on_circle(const UniPoly& p, double radius, double precision) {
    return extremum_on_circle(p, radius, precision, /*maximize=*/true);
}

Interval min_modulus_on_circle(const UniPoly& v, double radius, double precision) {
    return extremum_on_circle(v, radius, precision, /*maximize=*/false);
}

namespace {

std::complex<double> eval_poly(const std::vector<std::complex<double>>& c,
                               std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

// Accumulates the argument increment over an arc, splitting until each
// step turns by less than pi/2. Fails (returns false) when the image gets
// too close to the origin or the recursion exhausts its depth.
bool accumulate_turn(const std::vector<std::complex<double>>& c, double radius, double t0,
                     double t1, std::complex<double> p0, std::complex<double> p1,
                     double floor_abs, int depth, double& total) {
    if (std::abs(p0) < floor_abs || std::abs(p1) < floor_abs) return false;
    double dphi = std::arg(p1 / p0);
    if (std::abs(dphi) < 1.3) {  // comfortably under pi/2
        total += dphi;
        return true;
    }
    if (depth <= 0) return false;
    double tm = 0.5 * (t0 + t1);
    std::complex<double> pm = eval_poly(c, std::polar(radius, tm));
    return accumulate_turn(c, radius, t0, tm, p0, pm, floor_abs, depth - 1, total) &&
           accumulate_turn(c, radius, tm, t1, pm, p1, floor_abs, depth - 1, total);
}

}  // namespace

std::optional<long> winding_number_on_circle(const std::vector<std::complex<double>>& coeffs,
                                             double radius) {
    std::vector<std::complex<double>> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.empty()) return std::nullopt;
    double scale = 0.0, rp = 1.0;
    for (const auto& ck : c) {
        scale = std::max(scale, std::abs(ck) * rp);
        rp *= radius;
    }
    const double floor_abs = scale * 1e-13;
    const double two_pi = 2.0 * std::numbers::pi;
    const std::size_t N = 32 * c.size() + 64;

    double total = 0.0;
    std::complex<double> prev = eval_poly(c, std::polar(radius, 0.0));
    for (std::size_t j = 1; j <= N; ++j) {
        double t0 = two_pi * static_cast<double>(j - 1) / static_cast<double>(N);
        double t1 = two_pi * static_cast<double>(j) / static_cast<double>(N);
        std::complex<double> next =
            eval_poly(c, std::polar(radius, j == N ? 0.0 : t1));
        if (!accumulate_turn(c, radius, t0, t1, prev, next, floor_abs, 40, total))
            return std::nullopt;
        prev = next;
    }
    double turns = total / two_pi;
    long count = std::lround(turns);
    if (std::abs(turns - static_cast<double>(count)) > 1e-6) return std::nullopt;
    return count;
}

}  // namespace lacuna
