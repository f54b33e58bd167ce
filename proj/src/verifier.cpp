#include "lacuna/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "lacuna/modulus.hpp"

namespace lacuna {

namespace {

std::complex<double> eval_poly(const std::vector<std::complex<double>>& c,
                               std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

// Initial guesses on circles read off the upper convex hull of
// (i, log |c_i|): one radius per Newton-polygon edge. Handles the wide
// coefficient ranges of near-witness samples.
std::vector<std::complex<double>> newton_polygon_seeds(
    const std::vector<std::complex<double>>& c) {
    const std::size_t n = c.size() - 1;
    std::vector<double> logs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double a = std::abs(c[i]);
        logs[i] = a > 0 ? std::log(a) : -1e300;
    }
    std::vector<std::size_t> hull;  // indices of upper hull vertices
    for (std::size_t i = 0; i <= n; ++i) {
        if (logs[i] <= -1e299) continue;
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            double cross = (logs[b] - logs[a]) * static_cast<double>(i - a) -
                           (logs[i] - logs[a]) * static_cast<double>(b - a);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<std::complex<double>> seeds;
    seeds.reserve(n);
    const double golden_angle = 2.0 * std::numbers::pi * 0.3819660112501051;
    std::size_t placed = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        std::size_t i = hull[e], j = hull[e + 1];
        double radius = std::exp((logs[i] - logs[j]) / static_cast<double>(j - i));
        for (std::size_t k = i; k < j; ++k, ++placed)
            seeds.push_back(std::polar(
                radius, golden_angle * static_cast<double>(placed) + 0.31));
    }
    while (seeds.size() < n) {
        seeds.push_back(std::polar(1.0, golden_angle * static_cast<double>(placed) + 0.31));
        ++placed;
    }
    return seeds;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> c) {
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t n = c.size() - 1;

    std::vector<std::complex<double>> d(n);  // derivative
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = c[k] * static_cast<double>(k);

    // Backward-error floor: a point with |p(z)| below a few ulps of the
    // evaluation scale cannot be improved in doubles.
    auto residual_floor = [&](double r) {
        double acc = 0, rp = 1;
        for (std::size_t k = 0; k <= n; ++k, rp *= r) acc += std::abs(c[k]) * rp;
        return 8.0 * static_cast<double>(n + 1) * std::numeric_limits<double>::epsilon() * acc;
    };

    std::vector<std::complex<double>> z = newton_polygon_seeds(c);

    const int max_sweeps = 600;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_settled = true;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> p = eval_poly(c, z[i]);
            if (std::abs(p) <= residual_floor(std::abs(z[i]))) continue;
            std::complex<double> dp = eval_poly(d, z[i]);
            std::complex<double> w =
                std::abs(dp) == 0.0 ? std::complex<double>(1e-8, 1e-8) : p / dp;
            std::complex<double> s{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                std::complex<double> diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-300, 0);
                s += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - w * s;
            std::complex<double> corr = std::abs(denom) < 1e-300 ? w : w / denom;
            z[i] -= corr;
            if (std::abs(corr) > 1e-14 * (1.0 + std::abs(z[i]))) all_settled = false;
        }
        if (all_settled) return z;
    }
    throw ConvergenceError("simultaneous root iteration did not settle");
}

RootCount roots_in_disc(std::vector<std::complex<double>> coeffs, double radius,
                        double boundary_margin) {
    if (radius <= 0) throw DomainError("disc radius must be positive");
    double top = 0.0;
    for (const auto& ck : coeffs) top = std::max(top, std::abs(ck));
    if (top == 0.0) throw DomainError("zero polynomial has no finite root count");
    const double noise = top * 1e-13;

    // Leading noise: cut the effective degree.
    while (!coeffs.empty() && std::abs(coeffs.back()) <= noise) coeffs.pop_back();
    if (coeffs.empty()) throw DomainError("polynomial vanishes after thresholding");
    // Trailing (low-order) zeros: exact multiplicity at the origin.
    std::size_t origin_mult = 0;
    while (origin_mult < coeffs.size() && std::abs(coeffs[origin_mult]) <= noise)
        ++origin_mult;
    std::vector<std::complex<double>> deflated(coeffs.begin() + origin_mult, coeffs.end());

    RootCount out;
    out.count = origin_mult;
    bool margin_ok = true;
    if (deflated.size() > 1) {
        std::vector<std::complex<double>> roots = aberth_roots(deflated);
        std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
            return std::abs(x) < std::abs(y);
        });
        // Cluster merging at the documented tolerance; the cluster size is
        // the multiplicity, so the inside-count is unchanged.
        const double merge_tol =
            10.0 * std::sqrt(std::numeric_limits<double>::epsilon()) * radius;
        std::vector<std::pair<std::complex<double>, std::size_t>> clusters;
        for (const auto& r : roots) {
            if (!clusters.empty() && std::abs(r - clusters.back().first) <= merge_tol)
                ++clusters.back().second;
            else
                clusters.emplace_back(r, 1);
        }
        for (const auto& [center, mult] : clusters) {
            double dist = std::abs(center);
            if (std::abs(dist - radius) <= boundary_margin) margin_ok = false;
            if (dist <= radius) out.count += mult;
        }
    }
    auto winding = winding_number_on_circle(coeffs, radius);
    out.certified = margin_ok && winding.has_value() &&
                    *winding == static_cast<long>(out.count);
    return out;
}

LambdaSample multiplicity_witness(const BautinMatrix& matrix) {
    JetData jet = jet_proportionality(matrix.curve);
    if (jet.fully_proportional)
        throw StructureError("proportional components leave a kernel of dimension > 1");
    MatrixStats stats = matrix_stats(matrix);
    std::vector<ExactRow> head;
    head.reserve(stats.b);
    for (std::size_t k = 0; k < stats.b; ++k) head.push_back(matrix.row(k));
    ExactRow lambda = kernel_vector(head, matrix.cols);

    // Exact check: the composed family member must vanish to order exactly b.
    UniPoly f;
    std::size_t col0 = 0;
    for (const BautinBlock& block : matrix.blocks) {
        for (std::size_t c = 0; c < block.tau(); ++c) {
            if (lambda[col0 + c].is_zero()) continue;
            std::vector<ExactComplex> coeffs(block.row_offset + block.rows());
            for (std::size_t r = 0; r < block.rows(); ++r)
                coeffs[block.row_offset + r] = lambda[col0 + c] * block.entries[r][c];
            f = f + UniPoly(std::move(coeffs));
        }
        col0 += block.tau();
    }
    auto [valuation, low] = trailing_data(f);
    if (valuation != stats.b)
        throw StructureError("witness valuation " + std::to_string(valuation) +
                             " does not match the Bautin index " + std::to_string(stats.b));

    LambdaSample sample;
    sample.strategy = SampleStrategy::WitnessPerturbed;
    sample.values.resize(lambda.size());
    double top = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        sample.values[i] = lambda[i].to_complex();
        top = std::max(top, std::abs(sample.values[i]));
    }
    for (auto& v : sample.values) v /= top;
    return sample;
}

namespace {

struct FloatColumns {
    std::vector<std::vector<std::complex<double>>> cols;  // one per parameter
    std::size_t constant_column = SIZE_MAX;  // column of the degree-0 block, if any
};

std::vector<std::complex<double>> convolve(const std::vector<std::complex<double>>& a,
                                           const std::vector<std::complex<double>>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::complex<double>> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<std::complex<double>> float_pow(const std::vector<std::complex<double>>& base,
                                            unsigned long e) {
    std::vector<std::complex<double>> acc{std::complex<double>(1.0, 0.0)};
    std::vector<std::complex<double>> b = base;
    while (e > 0) {
        if (e & 1) acc = convolve(acc, b);
        if (e > 1) b = convolve(b, b);
        e >>= 1;
    }
    return acc;
}

// For rational curves the zeros of g_lambda inside the unit disc are the
// zeros of the cleared-denominator polynomial
//   H_lambda = sum lambda * P1^{t-1} P2^{n_l-(t-1)} V^{d - n_l},
// because V is zero-free on the closed disc. Columns are built that way
// so one polynomial root counter serves both cases.
FloatColumns build_float_columns(const NormalizedCurve& curve,
                                 const LacunarityDiagram& diagram) {
    FloatColumns out;
    std::size_t col = 0;
    for (std::size_t l = 0; l < diagram.block_count(); ++l) {
        const unsigned n = diagram.degrees[l];
        for (long t : diagram.selections[l].values) {
            auto column = convolve(float_pow(curve.p1f, static_cast<unsigned long>(t - 1)),
                                   float_pow(curve.p2f, n - static_cast<unsigned long>(t - 1)));
            if (curve.vf.has_value() && diagram.d > n)
                column = convolve(column, float_pow(*curve.vf, diagram.d - n));
            if (n == 0 && out.constant_column == SIZE_MAX) out.constant_column = col;
            out.cols.push_back(std::move(column));
            ++col;
        }
    }
    return out;
}

// Uniform and Gaussian draws straight from the generator bits, so the
// sample stream is identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::complex<double> gaussian_pair(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    return std::polar(r, 2.0 * std::numbers::pi * u2);
}

LambdaSample draw_sample(std::mt19937_64& rng, std::size_t m, std::size_t index,
                         const std::optional<LambdaSample>& witness,
                         std::size_t witness_coordinate) {
    LambdaSample out;
    const std::size_t bucket = index % 10;
    if (bucket == 8) {
        out.strategy = SampleStrategy::Coordinate;
        out.values.assign(m, {0.0, 0.0});
        out.values[rng() % m] = {1.0, 0.0};
        return out;
    }
    if (bucket == 9 && witness.has_value()) {
        out.strategy = SampleStrategy::WitnessPerturbed;
        out.values = witness->values;
        double magnitude = std::pow(10.0, -3.0 - 9.0 * uniform01(rng));
        double phase = 2.0 * std::numbers::pi * uniform01(rng);
        out.values[witness_coordinate] += std::polar(magnitude, phase);
        return out;
    }
    out.strategy = SampleStrategy::UniformSphere;
    out.values.resize(m);
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (auto& v : out.values) {
            v = gaussian_pair(rng);
            norm_sq += std::norm(v);
        }
    } while (norm_sq == 0.0);
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& v : out.values) v *= inv;
    return out;
}

}  // namespace

VerificationRun verify_run(const NormalizedCurve& curve, const LacunarityDiagram& diagram,
                           const BoundReport& report, std::size_t n_samples,
                           std::uint64_t seed) {
    VerificationRun run;
    run.samples = n_samples;

    FloatColumns columns = build_float_columns(curve, diagram);
    const std::size_t m = columns.cols.size();

    std::optional<LambdaSample> witness;
    std::size_t witness_coordinate = 0;
    if (!curve.fully_proportional) {
        try {
            // The denominator reduction leaves the kernel direction alone,
            // so the witness always comes from the numerator pair.
            ParamCurve numerator = curve.exact.is_rational()
                                       ? ParamCurve::make(curve.exact.p1, curve.exact.p2)
                                       : curve.exact;
            BautinMatrix matrix = assemble_matrix(numerator, diagram);
            LambdaSample w = multiplicity_witness(matrix);
            MatrixStats stats = matrix_stats(matrix);
            run.witness_multiplicity = stats.b;
            witness = std::move(w);
            witness_coordinate =
                columns.constant_column != SIZE_MAX ? columns.constant_column : 0;
        } catch (const StructureError&) {
            witness.reset();
        }
    }

    std::size_t max_degree = 0;
    for (const auto& c : columns.cols) max_degree = std::max(max_degree, c.size());

    struct SampleOutcome {
        bool skipped = true;
        std::size_t quarter = 0, rho = 0;
    };
    std::vector<SampleOutcome> outcomes(n_samples);

    auto run_one = [&](std::size_t i) {
        for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
            std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + i * 0x100000001b3ULL + attempt);
            LambdaSample lambda = draw_sample(rng, m, i, witness, witness_coordinate);
            std::vector<std::complex<double>> f(max_degree);
            for (std::size_t c = 0; c < m; ++c) {
                if (lambda.values[c] == std::complex<double>(0.0, 0.0)) continue;
                const auto& col = columns.cols[c];
                for (std::size_t k = 0; k < col.size(); ++k) f[k] += lambda.values[c] * col[k];
            }
            try {
                RootCount quarter = roots_in_disc(f, 0.25, 0.25e-6);
                RootCount rho = roots_in_disc(f, report.rho_lb, report.rho_lb * 1e-6);
                if (!quarter.certified || !rho.certified) continue;  // redraw
                outcomes[i] = {false, quarter.count, rho.count};
                return;
            } catch (const ConvergenceError&) {
                continue;  // redraw with a fresh sub-seed
            } catch (const DomainError&) {
                continue;  // e.g. an all-zero draw rounding to nothing
            }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 16);
    if (n_samples > 0) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_samples; i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < n_samples; ++i) {
        const SampleOutcome& o = outcomes[i];
        if (o.skipped) {
            ++run.skipped;
            continue;
        }
        run.max_count_quarter = std::max(run.max_count_quarter, o.quarter);
        run.max_count_rho = std::max(run.max_count_rho, o.rho);
        if (o.quarter > static_cast<std::size_t>(report.z_bound_int))
            run.violations.push_back({i, "quarter_disc", o.quarter});
        if (o.rho > report.b) run.violations.push_back({i, "rho_disc", o.rho});
    }
    return run;
}

}  // namespace lacuna
