#include "lacuna/lemma_suites.hpp"

#include <random>
#include <vector>

#include "lacuna/combinatorics.hpp"

namespace lacuna {

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    Rational q(num(rng), den(rng));
    q.canonicalize();  // the two-argument constructor stores p/q verbatim
    return q;
}

ExactComplex eval_at(const std::vector<ExactComplex>& coeffs, long x) {
    ExactComplex acc;
    ExactComplex z{Rational(x), Rational(0)};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

}  // namespace

bool run_lemma_suites(long t_max, bool fault_inject, std::ostream& log) {
    bool ok = true;
    std::mt19937_64 rng(0x1ac0a11u);

    // Extraction identity over every node set inside {0, ..., t_max}.
    std::size_t sets = 0, part1 = 0, part2 = 0;
    const unsigned long subsets = 1ul << (t_max + 1);
    for (unsigned long mask = 1; mask < subsets && ok; ++mask) {
        std::vector<long> nodes;
        for (long v = 0; v <= t_max; ++v)
            if (mask & (1ul << v)) nodes.push_back(v);
        ColumnSet t_set(nodes);
        ++sets;
        const std::size_t c = t_set.size() - 1;

        ExtractionWeights weights = vandermonde_weights(t_set);
        if (fault_inject) weights.weights.begin()->second = -weights.weights.begin()->second;

        auto weighted_sum = [&](const std::vector<ExactComplex>& values) {
            ExactComplex acc;
            for (std::size_t i = 0; i < t_set.size(); ++i)
                acc += ExactComplex(weights.at(t_set.at(i))) * values[i];
            return acc;
        };
        auto power_sum = [&](std::size_t q) {
            Rational acc = 0;
            for (std::size_t i = 0; i < t_set.size(); ++i) {
                Rational tq = 1;
                for (std::size_t e = 0; e < q; ++e) tq *= Rational(t_set.at(i));
                acc += tq * weights.at(t_set.at(i));
            }
            return acc;
        };

        // Part (1) on monomials: sum_t t^q K is 1 at q = c, 0 below.
        for (std::size_t q = 0; q <= c && ok; ++q) {
            Rational expect = q == c ? 1 : 0;
            if (power_sum(q) != expect) {
                log << "extraction part (1) fails for |T|=" << t_set.size() << ", q=" << q
                    << "\n";
                ok = false;
            }
            ++part1;
        }

        // Part (2) on random polynomials up to degree 6.
        for (int rep = 0; rep < 3 && ok; ++rep) {
            std::size_t deg = rng() % 7;
            std::vector<ExactComplex> coeffs(deg + 1);
            for (auto& z : coeffs) z = ExactComplex(random_rational(rng), random_rational(rng));
            std::vector<ExactComplex> values;
            for (std::size_t i = 0; i < t_set.size(); ++i)
                values.push_back(eval_at(coeffs, t_set.at(i)));
            ExactComplex lhs = weighted_sum(values);
            ExactComplex rhs;  // coeff_c + corrections from higher coefficients
            if (deg >= c) rhs += coeffs[c];
            for (std::size_t q = c + 1; q <= deg; ++q)
                rhs += coeffs[q] * ExactComplex(power_sum(q));
            if (!(lhs == rhs)) {
                log << "extraction part (2) fails for |T|=" << t_set.size()
                    << ", deg=" << deg << "\n";
                ok = false;
            }
            ++part2;
        }
    }
    log << "extraction identity: " << sets << " node sets, " << part1
        << " monomial checks, " << part2 << " polynomial checks\n";

    // Multivariate alternating sums vanish below the box weight.
    std::size_t boxes = 0, monomials = 0;
    for (unsigned total = 1; total <= 6 && ok; ++total) {
        // Compositions of `total` into positive parts.
        std::vector<std::vector<unsigned>> comps;
        std::vector<unsigned> cur;
        auto gen = [&](auto&& self, unsigned remaining) -> void {
            if (remaining == 0) {
                comps.push_back(cur);
                return;
            }
            for (unsigned part = 1; part <= remaining; ++part) {
                cur.push_back(part);
                self(self, remaining - part);
                cur.pop_back();
            }
        };
        gen(gen, total);
        for (const auto& box : comps) {
            ++boxes;
            // Every monomial of total degree below the box weight.
            std::vector<unsigned> gamma(box.size(), 0);
            auto walk = [&](auto&& self, std::size_t pos, unsigned budget) -> void {
                if (!ok) return;
                if (pos == box.size()) {
                    ++monomials;
                    auto value = multivariate_alternating_sum(
                        [&](const std::vector<unsigned>& idx) {
                            Rational prod = 1;
                            for (std::size_t j = 0; j < idx.size(); ++j) {
                                for (unsigned e = 0; e < gamma[j]; ++e)
                                    prod *= Rational(static_cast<long>(idx[j]));
                            }
                            return ExactComplex(prod);
                        },
                        box);
                    if (!value.is_zero()) {
                        log << "alternating sum does not vanish (box weight " << total
                            << ")\n";
                        ok = false;
                    }
                    return;
                }
                for (unsigned g = 0; g <= budget; ++g) {
                    gamma[pos] = g;
                    self(self, pos + 1, budget - g);
                }
                gamma[pos] = 0;
            };
            walk(walk, 0, total - 1);
        }
    }
    log << "alternating sums: " << boxes << " boxes, " << monomials << " monomials\n";

    // f_p^{R,N} is a polynomial of degree p: its (p+1)-st difference on
    // [0, R-p-1] vanishes.
    std::size_t shift_checks = 0;
    for (long big_r = 0; big_r <= 6 && ok; ++big_r)
        for (long big_n = 7; big_n <= 10 && ok; ++big_n)
            for (long p = 0; p <= big_r && ok; ++p) {
                std::vector<Rational> values;
                for (long n = 0; n <= big_r; ++n)
                    values.push_back(symmetric_shift_value(static_cast<std::size_t>(p), big_r,
                                                           big_n, n));
                for (long n = 0; n + p + 1 <= big_r && ok; ++n) {
                    Rational diff = 0;
                    for (long j = 0; j <= p + 1; ++j) {
                        Rational term = Rational(binomial(p + 1, j)) * values[n + p + 1 - j];
                        diff += (j % 2 == 0) ? term : -term;
                    }
                    ++shift_checks;
                    if (diff != 0) {
                        log << "sigma_p shift is not polynomial (p=" << p << ", R=" << big_r
                            << ", N=" << big_n << ")\n";
                        ok = false;
                    }
                }
            }
    log << "shifted symmetric values: " << shift_checks << " difference checks\n";
    return ok;
}

}  // namespace lacuna
