#include "lacuna/bounds.hpp"

#include <cmath>
#include <numbers>

#include "lacuna/dirround.hpp"

namespace lacuna {

namespace dr = dirf;

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::DistinctMult: return "distinct_mult";
        case CaseTag::EqualMult: return "equal_mult";
        case CaseTag::Proportional: return "proportional";
    }
    return "?";
}

namespace {

MagInterval mag_from_abs_sq(const Rational& abs_sq) {
    double mid = abs_sq.get_d();  // truncates toward zero
    return {dr::sqrt_down(dr::down(mid)), dr::sqrt_up(dr::up(mid))};
}

MagInterval mag_mul(const MagInterval& x, const MagInterval& y) {
    return {dr::mul_down(x.lo, y.lo), dr::mul_up(x.hi, y.hi)};
}

MagInterval mag_div(const MagInterval& x, const MagInterval& y) {
    if (y.lo <= 0) throw DomainError("division by a magnitude not bounded away from zero");
    return {dr::div_down(x.lo, y.hi), dr::div_up(x.hi, y.lo)};
}

MagInterval mag_pow(const MagInterval& x, unsigned long e) {
    MagInterval out{1.0, 1.0};
    for (unsigned long i = 0; i < e; ++i) out = mag_mul(out, x);
    return out;
}

std::vector<std::complex<double>> to_doubles(const UniPoly& p) {
    std::vector<std::complex<double>> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = p.coeff(k).to_complex();
    return out;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c,
                            std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

double l1_norm_on_circle(const std::vector<std::complex<double>>& c, double radius) {
    double acc = 0, rp = 1;
    for (const auto& ck : c) {
        acc += std::abs(ck) * rp;
        rp *= radius;
    }
    return acc;
}

// Enclosure of max_{|z|=R} |p(z)/v(z)| for a denominator without zeros on
// the circle. Works on the squared ratio: its sampled maximum plus a
// second-order pad built from Bernstein bounds on |p|^2, |v|^2 and a
// certified floor for |v|^2.
Interval rational_sup_on_circle(const std::vector<std::complex<double>>& p,
                                const std::vector<std::complex<double>>& v, double radius,
                                double precision) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double deg_g = 2.0 * static_cast<double>(p.size());  // >= trig degree of |p|^2
    const double deg_w = 2.0 * static_cast<double>(v.size());
    const double g_max = std::pow(l1_norm_on_circle(p, radius), 2);
    const double w_max = std::pow(l1_norm_on_circle(v, radius), 2);

    auto ratio_sq = [&](double th) {
        std::complex<double> z = std::polar(radius, th);
        return std::norm(horner(p, z)) / std::norm(horner(v, z));
    };

    // Certified floor for |v|^2 on the circle.
    double w_min;
    {
        std::size_t N = 4096 * v.size() + 4096;
        double best = HUGE_VAL;
        for (std::size_t j = 0; j < N; ++j) {
            double th = two_pi * static_cast<double>(j) / static_cast<double>(N);
            best = std::min(best, std::norm(horner(v, std::polar(radius, th))));
        }
        double h = std::numbers::pi / static_cast<double>(N);  // half spacing
        w_min = best - 0.5 * deg_w * deg_w * w_max * h * h;
        if (w_min <= 0)
            throw SingularDenominatorError("denominator not bounded away from zero on the circle");
    }

    // |(g/w)''| bound from Bernstein derivative bounds.
    double r_max = g_max / w_min;
    double dg = deg_g * g_max, ddg = deg_g * dg;
    double dw = deg_w * w_max, ddw = deg_w * dw;
    double c2 = ddg / w_min + 2.0 * dg * dw / (w_min * w_min) + r_max * ddw / w_min +
                2.0 * r_max * dw * dw / (w_min * w_min);

    double target = std::max(precision, 1e-12);
    std::size_t N = 4 * (p.size() + v.size()) + 64;
    {
        // Pad c2 h^2 / 8 with h = 2 pi / N should stay below target * r_max.
        double needed = std::numbers::pi * std::sqrt(c2 / (2.0 * target * std::max(r_max, 1e-300)));
        if (needed > static_cast<double>(N)) N = static_cast<std::size_t>(needed) + 1;
        if (N > 100'000'000) throw ConvergenceError("rational normalization budget exhausted");
    }
    double best = 0;
    for (std::size_t j = 0; j < N; ++j)
        best = std::max(best, ratio_sq(two_pi * static_cast<double>(j) / static_cast<double>(N)));
    double h = std::numbers::pi / static_cast<double>(N);
    double hi_sq = best + 0.5 * c2 * h * h;
    double pad = 1.0 + 1e-12 * static_cast<double>(p.size() + v.size() + 4);
    return {dr::down(std::sqrt(best) / pad), dr::up(std::sqrt(hi_sq) * pad)};
}

}  // namespace

NormalizedCurve normalize_curve(const ParamCurve& curve, double big_r, double precision) {
    if (big_r <= 0) throw DomainError("normalization radius must be positive");
    NormalizedCurve nc;
    nc.exact = curve;
    nc.radius = big_r;
    JetData jet = jet_proportionality(curve);
    nc.jet_k = jet.k;
    nc.fully_proportional = jet.fully_proportional;

    Interval m;
    if (!curve.is_rational()) {
        Interval i1 = max_modulus_on_circle(curve.p1, big_r, precision);
        Interval i2 = max_modulus_on_circle(curve.p2, big_r, precision);
        m = {std::max(i1.lo, i2.lo), std::max(i1.hi, i2.hi)};
    } else {
        auto vf = to_doubles(*curve.v);
        auto w = winding_number_on_circle(vf, big_r);
        if (!w || *w != 0)
            throw SingularDenominatorError("denominator has zeros inside the disc");
        Interval i1 = rational_sup_on_circle(to_doubles(curve.p1), vf, big_r, precision);
        Interval i2 = rational_sup_on_circle(to_doubles(curve.p2), vf, big_r, precision);
        m = {std::max(i1.lo, i2.lo), std::max(i1.hi, i2.hi)};
        nc.vf.emplace(vf.size());
        double rp = 1;
        for (std::size_t k = 0; k < vf.size(); ++k, rp *= big_r) (*nc.vf)[k] = vf[k] * rp;
        nc.beta0_abs = mag_from_abs_sq(curve.beta0->abs_sq());
    }
    if (m.lo <= 0) throw DomainError("normalization constant is not positive");
    nc.m_r = m;

    auto scale_component = [&](const UniPoly& p) {
        std::vector<std::complex<double>> out(p.size());
        double rp = 1;
        for (std::size_t k = 0; k < p.size(); ++k, rp *= big_r)
            out[k] = p.coeff(k).to_complex() * (rp / m.hi);
        return out;
    };
    nc.p1f = scale_component(curve.p1);
    nc.p2f = scale_component(curve.p2);

    const MagInterval m_int{m.lo, m.hi};
    const MagInterval r_int{dr::down(big_r), dr::up(big_r)};
    nc.alpha0_abs =
        mag_div(mag_mul(mag_from_abs_sq(curve.alpha[0].abs_sq()), mag_pow(r_int, curve.nu1)),
                m_int);
    nc.a0_abs =
        mag_div(mag_mul(mag_from_abs_sq(curve.a[0].abs_sq()), mag_pow(r_int, curve.nu2)),
                m_int);
    nc.mu_abs = mag_mul(mag_from_abs_sq((curve.alpha[0] / curve.a[0]).abs_sq()),
                        mag_pow(r_int, curve.nu1 - curve.nu2));
    if (!jet.fully_proportional && jet.delta_bar_k.has_value()) {
        nc.delta_bar_abs =
            mag_div(mag_mul(mag_from_abs_sq(jet.delta_bar_k->abs_sq()),
                            mag_pow(r_int, curve.nu + jet.k + 1)),
                    m_int);
    }
    return nc;
}

double sigma_bar(double rho, const std::vector<std::size_t>& basis_rows, std::size_t b) {
    if (rho <= 0) throw DomainError("sigma_bar needs rho > 0");
    double acc = 0;
    for (std::size_t k : basis_rows)
        acc = dr::add_up(acc, dr::up(std::pow(rho, static_cast<double>(b - k))));
    return acc;
}

double sigma_bar_bound(double rho, std::size_t sigma, std::size_t b) {
    if (rho <= 0) throw DomainError("sigma_bar needs rho > 0");
    const double s = static_cast<double>(sigma);
    if (rho == 1.0) return s;
    if (rho < 1.0) return dr::div_up(1.0 - std::pow(rho, s), dr::down(1.0 - rho));
    double head = std::pow(rho, static_cast<double>(b) + 1.0);
    return dr::up(head * (1.0 - std::pow(rho, -s)) / (rho - 1.0));
}

double c_estimate(std::size_t sigma, double delta_lb, double b_r, double big_r,
                  std::size_t b) {
    if (delta_lb <= 0) throw DomainError("c estimate needs delta > 0");
    const double s = static_cast<double>(sigma);
    double beta = big_r <= 1.0 ? static_cast<double>(b) : s / 2.0;
    double log_c = dr::add_up(dr::up(std::log(s)),
                              dr::up((s - 1.0) * (std::log(b_r) + 0.5 * std::log(s))));
    log_c = dr::add_up(log_c, dr::up(-std::log(delta_lb)));
    log_c = dr::add_up(log_c, dr::up(-beta * (s - 1.0) * std::log(big_r)));
    return dr::exp_up(log_c);
}

ZeroCountBound bernstein_zero_bound(const BernsteinParams& params, std::size_t b) {
    if (!(params.alpha > 0 && params.alpha < 1))
        throw DomainError("Bernstein ratio alpha must lie in (0,1)");
    if (!params.big_k.has_value() && !(params.r > 0 && params.r < params.big_r))
        throw DomainError("Bernstein radius must satisfy 0 < r < R");
    ZeroCountBound out;
    const double bb = static_cast<double>(b);
    const bool specialized =
        params.r == 0.5 * params.big_r && params.alpha == 0.5 && !params.big_k.has_value();
    if (specialized) {
        // r = R/2, alpha = 1/2:
        //   5 b log 2 + 5 log(2 + A / R^b), A = B_R c sigma_bar.
        double log_a = dr::up(std::log(params.b_r * params.c_est * params.sigma_bar_val) -
                              bb * std::log(params.big_r));
        out.count_bound =
            dr::add_up(dr::mul_up(5.0 * bb, dr::log2_up()),
                       dr::mul_up(5.0, dr::log_2_plus_exp_up(log_a)));
    } else {
        double big_k;
        if (params.big_k.has_value()) {
            big_k = *params.big_k;
        } else {
            // K = alpha^{-b} (1 + alpha (1-alpha^b)/(1-alpha)
            //                   + B_R c r sigma_bar / (R^{b+1} (1 - r/R))).
            const double a = params.alpha;
            double head = 1.0 + a * (1.0 - std::pow(a, bb)) / (1.0 - a);
            double tail = params.b_r * params.c_est * params.r * params.sigma_bar_val /
                          (std::pow(params.big_r, bb + 1.0) * (1.0 - params.r / params.big_r));
            big_k = dr::up(std::pow(a, -bb) * (head + tail));
        }
        double denom =
            dr::down(std::log((1.0 + params.alpha * params.alpha) / (2.0 * params.alpha)));
        out.count_bound = dr::div_up(dr::log_up(big_k), denom);
    }
    if (params.c_est > 0) {
        double log_a = dr::up(std::log(params.b_r * params.c_est * params.sigma_bar_val) -
                              bb * std::log(params.big_r));
        double log_rho = dr::down(std::log(params.big_r) - bb * std::log(8.0) -
                                  std::max(std::log(2.0), log_a));
        out.rho_localization = dr::exp_down(log_rho);
    }
    return out;
}

namespace {

Rational rational_pow(Rational base, std::size_t e) {
    Rational acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

CaseTag classify(const ParamCurve& curve, const JetData& jet) {
    if (jet.fully_proportional) return CaseTag::Proportional;
    return curve.nu1 == curve.nu2 ? CaseTag::EqualMult : CaseTag::DistinctMult;
}

}  // namespace

ClosedInvariants closed_invariants(const ParamCurve& curve, const LacunarityDiagram& diagram,
                                   const DiagramAggregates& agg,
                                   const ConditionTag& condition) {
    if (!condition.holds)
        throw DomainError("closed forms require a verified lacunarity condition");
    JetData jet = jet_proportionality(curve);
    ClosedInvariants inv;
    inv.case_tag = classify(curve, jet);
    const std::size_t ld = diagram.ell_d();
    const std::size_t m = diagram.m();
    const Rational a0_sq = curve.a[0].abs_sq();
    const Rational alpha0_sq = curve.alpha[0].abs_sq();
    const Rational mu_sq = (curve.alpha[0] / curve.a[0]).abs_sq();

    switch (inv.case_tag) {
        case CaseTag::DistinctMult: {
            std::size_t b = 0;
            for (std::size_t v : agg.nu_tilde) b = std::max(b, v);
            inv.b = b;
            inv.sigma = m;
            inv.delta_lb_sq = rational_pow(alpha0_sq, agg.t_bar - m) *
                              rational_pow(a0_sq, agg.tau_n_bar - (agg.t_bar - m));
            if (condition.kind == ConditionKind::L1) {
                const std::size_t tau = diagram.tau(ld);
                const std::size_t tb = agg.t_bar_ell[ld];
                inv.delta_refined_lb_sq =
                    rational_pow(alpha0_sq, tb - tau) *
                    rational_pow(a0_sq, tau * diagram.degrees[ld] + tau - tb);
            }
            break;
        }
        case CaseTag::EqualMult: {
            const unsigned k = jet.k;
            std::size_t b = 0;
            for (std::size_t l = 0; l <= ld; ++l)
                b = std::max(b, static_cast<std::size_t>(curve.nu) * diagram.degrees[l] +
                                    (k + 1) * (diagram.tau(l) - 1));
            inv.b = b;
            inv.sigma = m;
            const Rational dbar_sq = jet.delta_bar_k->abs_sq();
            inv.delta_lb_sq = agg.c_bar * agg.c_bar *
                              rational_pow(mu_sq, agg.t_bar - agg.tau_bar) *
                              rational_pow(a0_sq, agg.tau_n_bar - agg.tau_bar_prime) *
                              rational_pow(dbar_sq, agg.tau_bar_prime);
            if (condition.kind == ConditionKind::L1) {
                const std::size_t tau = diagram.tau(ld);
                const std::size_t tb = agg.t_bar_ell[ld];
                inv.delta_refined_lb_sq =
                    agg.c_ell[ld] * agg.c_ell[ld] *
                    rational_pow(mu_sq, tb - tau * (tau + 1) / 2) *
                    rational_pow(a0_sq,
                                 tau * diagram.degrees[ld] - tau * (tau - 1) / 2) *
                    rational_pow(dbar_sq, tau * (tau - 1) / 2);
            }
            break;
        }
        case CaseTag::Proportional: {
            inv.b = static_cast<std::size_t>(curve.nu) * diagram.d;
            inv.sigma = ld + 1;
            inv.delta_lb_sq = rational_pow(mu_sq, agg.t_bar_prime1 - (ld + 1)) *
                              rational_pow(a0_sq, agg.n_bar);
            if (condition.kind == ConditionKind::L1) {
                inv.delta_refined_lb_sq =
                    rational_pow(mu_sq,
                                 static_cast<std::size_t>(diagram.selections[ld].at(0)) - 1) *
                    rational_pow(a0_sq, diagram.degrees[ld]);
            }
            break;
        }
    }
    return inv;
}

namespace {

// Everything the Z / rho formulas consume, with directions pinned:
// magnitudes as certified enclosures, combinatorial counts exact.
struct ReportContext {
    CaseTag tag;
    bool rational = false;
    std::size_t b = 0, sigma_full = 0, ld = 0, m = 0;
    unsigned k = 0;
    DiagramAggregates agg;
    MagInterval alpha_eff, a_eff, mu_eff, dbar_eff;  // beta_0-adjusted in rational mode
    double c_bar_lo = 0, c_ell_d_lo = 0;
};

double log_lo(const MagInterval& x) {
    if (x.lo <= 0) throw DomainError("magnitude not bounded away from zero");
    return dr::log_down(x.lo);
}

// Upper bound of log(1/x).
double neg_log_hi(const MagInterval& x) {
    if (x.lo <= 0) throw DomainError("magnitude not bounded away from zero");
    return dr::neg_log_up(x.lo);
}

// log of the generic delta lower bound, rounded down.
double log_delta_generic(const ReportContext& cx) {
    const DiagramAggregates& agg = cx.agg;
    switch (cx.tag) {
        case CaseTag::DistinctMult:
            return dr::add_down(
                dr::mul_down(static_cast<double>(agg.t_bar - cx.m), log_lo(cx.alpha_eff)),
                dr::mul_down(static_cast<double>(agg.tau_n_bar - (agg.t_bar - cx.m)),
                             log_lo(cx.a_eff)));
        case CaseTag::EqualMult: {
            double acc = dr::log_down(cx.c_bar_lo);
            acc = dr::add_down(acc, dr::mul_down(static_cast<double>(agg.t_bar - agg.tau_bar),
                                                 log_lo(cx.mu_eff)));
            acc = dr::add_down(
                acc, dr::mul_down(static_cast<double>(agg.tau_n_bar - agg.tau_bar_prime),
                                  log_lo(cx.a_eff)));
            return dr::add_down(acc, dr::mul_down(static_cast<double>(agg.tau_bar_prime),
                                                  log_lo(cx.dbar_eff)));
        }
        case CaseTag::Proportional:
            return dr::add_down(
                dr::mul_down(static_cast<double>(agg.t_bar_prime1 - (cx.ld + 1)),
                             log_lo(cx.mu_eff)),
                dr::mul_down(static_cast<double>(agg.n_bar), log_lo(cx.a_eff)));
    }
    return 0;
}

// log of the last-block (L1) delta lower bound, rounded down.
double log_delta_refined(const ReportContext& cx, const LacunarityDiagram& diagram) {
    const std::size_t ld = cx.ld;
    const std::size_t tau = diagram.tau(ld);
    const std::size_t tb = cx.agg.t_bar_ell[ld];
    const std::size_t nd = diagram.degrees[ld];
    switch (cx.tag) {
        case CaseTag::DistinctMult:
            return dr::add_down(
                dr::mul_down(static_cast<double>(tb - tau), log_lo(cx.alpha_eff)),
                dr::mul_down(static_cast<double>(tau * nd + tau - tb), log_lo(cx.a_eff)));
        case CaseTag::EqualMult: {
            double acc = dr::log_down(cx.c_ell_d_lo);
            acc = dr::add_down(acc, dr::mul_down(static_cast<double>(tb - tau * (tau + 1) / 2),
                                                 log_lo(cx.mu_eff)));
            acc = dr::add_down(acc,
                               dr::mul_down(static_cast<double>(tau * nd - tau * (tau - 1) / 2),
                                            log_lo(cx.a_eff)));
            return dr::add_down(acc, dr::mul_down(static_cast<double>(tau * (tau - 1) / 2),
                                                  log_lo(cx.dbar_eff)));
        }
        case CaseTag::Proportional:
            return dr::add_down(
                dr::mul_down(static_cast<double>(diagram.selections[ld].at(0) - 1),
                             log_lo(cx.mu_eff)),
                dr::mul_down(static_cast<double>(nd), log_lo(cx.a_eff)));
    }
    return 0;
}

// Z bound of the corollary form 5 b log 2 + 5 log(2 + (4/3) s^{(s+1)/2} / delta).
double z_corollary_up(std::size_t b, std::size_t sigma, double log_delta_lo) {
    const double s = static_cast<double>(sigma);
    double log_arg = dr::up(std::log(4.0 / 3.0) + 0.5 * (s + 1.0) * std::log(s) - log_delta_lo);
    return dr::add_up(dr::mul_up(5.0 * static_cast<double>(b), dr::log2_up()),
                      dr::mul_up(5.0, dr::log_2_plus_exp_up(log_arg)));
}

// rho of the corollary form (1/8^b) min(1/2, 3 delta / (4 s^{(s+1)/2})),
// returned as a log, rounded down.
double log_rho_corollary_down(std::size_t b, std::size_t sigma, double log_delta_lo) {
    const double s = static_cast<double>(sigma);
    double second =
        dr::down(std::log(3.0 / 4.0) + log_delta_lo - 0.5 * (s + 1.0) * std::log(s));
    double chosen = std::min(dr::down(std::log(0.5)), second);
    return dr::add_down(dr::mul_down(-static_cast<double>(b), dr::up(std::log(8.0))), chosen);
}

}  // namespace

BoundReport build_bound_report(const NormalizedCurve& nc, const LacunarityDiagram& diagram,
                               const ConditionTag& condition, bool rational_mode) {
    if (!condition.holds)
        throw DomainError("bound reports require a verified lacunarity condition");
    const ParamCurve& curve = nc.exact;
    JetData jet = jet_proportionality(curve);

    ReportContext cx;
    cx.tag = classify(curve, jet);
    cx.rational = rational_mode;
    cx.agg = aggregates(diagram, curve);
    cx.ld = diagram.ell_d();
    cx.m = diagram.m();
    cx.k = nc.jet_k;

    if (cx.tag != CaseTag::Proportional && cx.m < 2)
        throw DomainError("the main bound needs m >= 2 parameters");
    if (cx.tag == CaseTag::Proportional && cx.ld < 1)
        throw DomainError("the proportional bound needs at least two degrees");
    if (rational_mode && cx.tag == CaseTag::Proportional)
        throw DomainError("rational reduction assumes non-proportional components");

    // Effective magnitudes; the rational reduction divides the initial
    // coefficients by beta_0 and leaves mu alone.
    cx.alpha_eff = rational_mode ? mag_div(nc.alpha0_abs, nc.beta0_abs) : nc.alpha0_abs;
    cx.a_eff = rational_mode ? mag_div(nc.a0_abs, nc.beta0_abs) : nc.a0_abs;
    cx.mu_eff = nc.mu_abs;
    cx.dbar_eff = rational_mode && nc.delta_bar_abs.hi > 0
                      ? mag_div(nc.delta_bar_abs, nc.beta0_abs)
                      : nc.delta_bar_abs;
    if (cx.alpha_eff.lo > 1.0 || cx.a_eff.lo > 1.0)
        throw DomainError("input is not normalized: initial coefficients exceed the Cauchy bound");
    cx.c_bar_lo = dr::down(cx.agg.c_bar.get_d());
    cx.c_ell_d_lo = dr::down(cx.agg.c_ell[cx.ld].get_d());

    BoundReport rep;
    rep.case_tag = cx.tag;
    rep.condition_used = condition.kind;
    rep.rational = rational_mode;
    rep.ell_e = cx.agg.ell_e;
    rep.m = cx.m;
    rep.d = diagram.d;
    rep.jet_k = cx.k;
    rep.t_bar = cx.agg.t_bar;
    rep.t_bar_prime1 = cx.agg.t_bar_prime1;
    rep.n_bar = cx.agg.n_bar;
    rep.tau_n_bar = cx.agg.tau_n_bar;
    rep.tau_bar = cx.agg.tau_bar;
    rep.tau_bar_prime = cx.agg.tau_bar_prime;
    rep.c_bar = cx.c_bar_lo;
    rep.alpha0_abs = cx.alpha_eff.lo;
    rep.a0_abs = cx.a_eff.lo;
    rep.mu_abs = cx.mu_eff.lo;
    rep.delta_bar_abs = cx.dbar_eff.lo;
    rep.beta0_abs = nc.beta0_abs.lo;

    // b, sigma, and the rho-disc multiplicity claim.
    const std::size_t le = cx.agg.ell_e;
    switch (cx.tag) {
        case CaseTag::DistinctMult:
            rep.b = cx.agg.nu_tilde[le];
            rep.sigma = cx.m;
            rep.rho_multiplicity_claim = cx.agg.nu_tilde[le];
            break;
        case CaseTag::EqualMult:
            rep.b = static_cast<std::size_t>(curve.nu) * diagram.degrees[le] +
                    (cx.k + 1) * (diagram.tau(le) - 1);
            rep.sigma = cx.m;
            rep.rho_multiplicity_claim = static_cast<std::size_t>(curve.nu) * diagram.degrees[le];
            break;
        case CaseTag::Proportional:
            rep.b = static_cast<std::size_t>(curve.nu) * diagram.d;
            rep.sigma = cx.ld + 1;
            rep.rho_multiplicity_claim = rep.b;
            break;
    }
    if ((condition.kind == ConditionKind::L1 || condition.kind == ConditionKind::L2a ||
         condition.kind == ConditionKind::L2b) &&
        le != cx.ld)
        throw StructureError("argmax block should be the last one under L1/L2");

    // Generic bounds.
    const double log_delta = log_delta_generic(cx);
    rep.log_delta_lb = log_delta;
    rep.delta_lb = dr::exp_down(log_delta);
    double z_generic = 0;
    switch (cx.tag) {
        case CaseTag::DistinctMult: {
            const double m = static_cast<double>(cx.m);
            z_generic = dr::mul_up(5.0 * static_cast<double>(cx.agg.nu_tilde[le] + 1),
                                   dr::log2_up());
            z_generic = dr::add_up(z_generic, dr::up(2.5 * (m + 1.0) * std::log(m)));
            z_generic = dr::add_up(
                z_generic, dr::mul_up(5.0 * static_cast<double>(cx.agg.t_bar - cx.m),
                                      neg_log_hi(cx.alpha_eff)));
            z_generic = dr::add_up(
                z_generic,
                dr::mul_up(5.0 * static_cast<double>(cx.agg.tau_n_bar -
                                                     (cx.agg.t_bar - cx.m)),
                           neg_log_hi(cx.a_eff)));
            break;
        }
        case CaseTag::EqualMult:
            z_generic = z_corollary_up(rep.b, cx.m, log_delta);
            break;
        case CaseTag::Proportional: {
            const double s = static_cast<double>(cx.ld + 1);
            z_generic = dr::mul_up(5.0 * static_cast<double>(rep.b + 1), dr::log2_up());
            z_generic = dr::add_up(z_generic, dr::up(2.5 * (s + 1.0) * std::log(s)));
            z_generic = dr::add_up(
                z_generic,
                dr::mul_up(5.0 * static_cast<double>(cx.agg.t_bar_prime1 - (cx.ld + 1)),
                           neg_log_hi(cx.mu_eff)));
            z_generic = dr::add_up(z_generic,
                                   dr::mul_up(5.0 * static_cast<double>(cx.agg.n_bar),
                                              neg_log_hi(cx.a_eff)));
            break;
        }
    }
    rep.z_bound_generic = z_generic;
    double log_rho_generic = log_rho_corollary_down(rep.b, rep.sigma, log_delta);
    rep.rho_generic = dr::exp_down(log_rho_generic);

    double z_head = z_generic;
    double log_rho_head = log_rho_generic;

    // Last-block refinement under L1.
    if (condition.kind == ConditionKind::L1) {
        const double log_delta_ref = log_delta_refined(cx, diagram);
        rep.log_delta_refined_lb = log_delta_ref;
        rep.delta_refined_lb = dr::exp_down(log_delta_ref);
        const std::size_t sigma_ref =
            cx.tag == CaseTag::Proportional ? cx.ld + 1 : diagram.tau(cx.ld);
        double z_ref;
        if (cx.tag == CaseTag::DistinctMult) {
            // 5 nu_tilde log 2 + 5 log(2 + (4/3) tau^{(tau+1)/2} / delta).
            const double s = static_cast<double>(sigma_ref);
            double log_arg =
                dr::up(std::log(4.0 / 3.0) + 0.5 * (s + 1.0) * std::log(s) - log_delta_ref);
            z_ref = dr::add_up(
                dr::mul_up(5.0 * static_cast<double>(cx.agg.nu_tilde[cx.ld]), dr::log2_up()),
                dr::mul_up(5.0, dr::log_2_plus_exp_up(log_arg)));
        } else {
            z_ref = z_corollary_up(rep.b, sigma_ref, log_delta_ref);
        }
        rep.z_bound_refined = z_ref;
        double log_rho_ref = log_rho_corollary_down(rep.b, sigma_ref, log_delta_ref);
        rep.rho_refined = dr::exp_down(log_rho_ref);
        z_head = std::min(z_head, z_ref);
        log_rho_head = std::max(log_rho_head, log_rho_ref);
    }

    rep.z_bound = z_head;
    rep.z_bound_int = static_cast<long long>(std::ceil(z_head));
    rep.log_rho_lb = log_rho_head;
    rep.rho_lb = dr::exp_down(log_rho_head);
    if (rep.z_bound < static_cast<double>(rep.b))
        throw StructureError("zero-count bound fell below the Bautin index");
    return rep;
}

BoundReport zero_bound_report(const NormalizedCurve& curve, const LacunarityDiagram& diagram,
                              const ConditionTag& condition) {
    if (curve.exact.is_rational())
        throw DomainError("use rational_bound_report for curves with a denominator");
    return build_bound_report(curve, diagram, condition, /*rational_mode=*/false);
}

}  // namespace lacuna
