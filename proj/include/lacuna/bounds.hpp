#pragma once

#include <complex>
#include <optional>

#include "lacuna/bautin.hpp"
#include "lacuna/modulus.hpp"

namespace lacuna {

enum class CaseTag { DistinctMult, EqualMult, Proportional };
const char* case_name(CaseTag tag);

// Certified enclosure of a nonnegative magnitude.
struct MagInterval {
    double lo = 0;
    double hi = 0;
};

// The curve rescaled so that R = B_R = 1: components of P(R z) / M_R are
// certified bounded by 1 on the closed unit disc (for rational curves,
// P_i(R z) / (M V(R z)) likewise). Keeps the exact pre-normalization
// curve for all structural data and certified magnitude enclosures of the
// normalized initial coefficients.
struct NormalizedCurve {
    ParamCurve exact;
    double radius = 1.0;
    Interval m_r{1.0, 1.0};

    std::vector<std::complex<double>> p1f, p2f;  // normalized coefficients
    std::optional<std::vector<std::complex<double>>> vf;  // V(R z), unscaled

    MagInterval alpha0_abs, a0_abs;      // |alpha_0'|, |a_0'|
    MagInterval mu_abs, delta_bar_abs;   // |mu'|, |delta_bar_k'| (equal mult.)
    MagInterval beta0_abs;               // |beta_0| (rational curves)
    unsigned jet_k = 0;
    bool fully_proportional = false;
};

NormalizedCurve normalize_curve(const ParamCurve& curve, double big_r, double precision);

// sum_{k in S} rho^{b-k}, rounded up.
double sigma_bar(double rho, const std::vector<std::size_t>& basis_rows, std::size_t b);
// The case-split upper bound used when S is not known explicitly.
double sigma_bar_bound(double rho, std::size_t sigma, std::size_t b);

// Span-constant estimate c <= sigma (B_R sqrt(sigma))^{sigma-1} /
// (delta R^{beta (sigma-1)}), beta = b for R <= 1 and sigma/2 otherwise.
// Rounded up.
double c_estimate(std::size_t sigma, double delta_lb, double b_r, double big_r,
                  std::size_t b);

struct BernsteinParams {
    double r = 0.5;
    double alpha = 0.5;
    std::optional<double> big_k;  // explicit Bernstein constant, if known
    double sigma_bar_val = 4.0 / 3.0;
    double c_est = 0.0;
    double b_r = 1.0;
    double big_r = 1.0;
};

struct ZeroCountBound {
    double count_bound = 0;
    double rho_localization = 0;
};

// Zero count in the closed disc of radius alpha * r and localization
// radius for the disc carrying only the forced b zeros. With an explicit
// K the count is log K / log((1+alpha^2)/(2 alpha)); otherwise the
// specialized r = R/2, alpha = 1/2 estimate
//   5 b log 2 + 5 log(2 R^b + B_R c sigma_bar) - 5 b log R
// is used. Rounded up; rho rounded down.
ZeroCountBound bernstein_zero_bound(const BernsteinParams& params, std::size_t b);

// Closed forms for b, sigma and the delta lower bound on the exact curve;
// squared magnitudes are exact rationals so they can be compared against
// minors with zero tolerance.
struct ClosedInvariants {
    CaseTag case_tag = CaseTag::DistinctMult;
    std::size_t b = 0;
    std::size_t sigma = 0;
    Rational delta_lb_sq;
    std::optional<Rational> delta_refined_lb_sq;  // last-block form, under L1
};

ClosedInvariants closed_invariants(const ParamCurve& curve, const LacunarityDiagram& diagram,
                                   const DiagramAggregates& agg, const ConditionTag& condition);

struct BoundReport {
    CaseTag case_tag = CaseTag::DistinctMult;
    ConditionKind condition_used = ConditionKind::L1;
    bool rational = false;

    std::size_t b = 0;
    std::size_t sigma = 0;
    std::size_t ell_e = 0;
    // The multiplicity the theorems assert inside the rho-disc (nu_tilde
    // or nu n_{ell_e}); verification tests the weaker count <= b.
    std::size_t rho_multiplicity_claim = 0;

    double delta_lb = 0;  // normalized closed-form lower bound, rounded down
    double log_delta_lb = 0;
    std::optional<double> delta_refined_lb;
    std::optional<double> log_delta_refined_lb;

    double z_bound = 0;  // headline: min of generic and refined, rounded up
    long long z_bound_int = 0;
    double z_bound_generic = 0;
    std::optional<double> z_bound_refined;

    double rho_lb = 0;  // headline: max of generic and refined, rounded down
    double log_rho_lb = 0;
    double rho_generic = 0;
    std::optional<double> rho_refined;

    // Audit symbols.
    std::size_t m = 0, d = 0, jet_k = 0;
    std::size_t t_bar = 0, t_bar_prime1 = 0, n_bar = 0;
    std::size_t tau_n_bar = 0, tau_bar = 0, tau_bar_prime = 0;
    double c_bar = 0;  // rounded down
    double alpha0_abs = 0, a0_abs = 0, mu_abs = 0, delta_bar_abs = 0, beta0_abs = 0;
};

// The final bound report for a normalized polynomial curve under a
// verified sparsity condition.
BoundReport zero_bound_report(const NormalizedCurve& curve, const LacunarityDiagram& diagram,
                              const ConditionTag& condition);

// Shared report engine; rational_mode switches on the beta_0-adjusted
// magnitudes of the denominator reduction.
BoundReport build_bound_report(const NormalizedCurve& curve, const LacunarityDiagram& diagram,
                               const ConditionTag& condition, bool rational_mode);

}  // namespace lacuna
