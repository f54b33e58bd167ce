#pragma once

#include <cmath>

namespace lacuna::dirf {

// Directed float helpers: every operation pads its libm result by two
// ulps in the safe direction, so composed bounds stay certified without
// touching the FPU rounding mode.

inline double up(double x) {
    return std::nextafter(std::nextafter(x, HUGE_VAL), HUGE_VAL);
}
inline double down(double x) {
    return std::nextafter(std::nextafter(x, -HUGE_VAL), -HUGE_VAL);
}

inline double add_up(double a, double b) { return up(a + b); }
inline double add_down(double a, double b) { return down(a + b); }
inline double mul_up(double a, double b) { return up(a * b); }
inline double mul_down(double a, double b) { return down(a * b); }
inline double div_up(double a, double b) { return up(a / b); }
inline double div_down(double a, double b) { return down(a / b); }

// Arguments must already be bounds in the matching direction.
inline double log_up(double x) { return up(std::log(x)); }
inline double log_down(double x) { return down(std::log(x)); }
inline double sqrt_up(double x) { return up(std::sqrt(x)); }
inline double sqrt_down(double x) { return x <= 0 ? 0.0 : down(std::sqrt(x)); }
inline double exp_up(double x) { return up(std::exp(x)); }
inline double exp_down(double x) { return down(std::exp(x)); }

inline double log2_up() { return up(std::log(2.0)); }
inline double log2_down() { return down(std::log(2.0)); }

// log(1/x) from a lower bound of x (upper result) or an upper bound of x
// (lower result).
inline double neg_log_up(double x_lo) { return up(-std::log(x_lo)); }
inline double neg_log_down(double x_hi) { return down(-std::log(x_hi)); }

// Upper bound of log(2 + A) given an upper bound of log A. Safe against
// overflow of A itself.
inline double log_2_plus_exp_up(double log_a) {
    if (log_a > 500.0) return up(log_a);  // 2/A below one ulp of log_a
    return up(std::log(2.0 + std::exp(up(log_a))));
}

}  // namespace lacuna::dirf
