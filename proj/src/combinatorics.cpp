#include "lacuna/combinatorics.hpp"

namespace lacuna {

ColumnSet::ColumnSet(std::vector<long> v) : values(std::move(v)) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0) throw DomainError("column set values must be nonnegative");
        if (i > 0 && values[i] <= values[i - 1])
            throw DomainError("column set must be strictly increasing");
    }
}

ColumnSet ColumnSet::prefix(std::size_t j) const {
    if (j > values.size()) throw DomainError("column set prefix out of range");
    return ColumnSet(std::vector<long>(values.begin(), values.begin() + j));
}

const Rational& ExtractionWeights::at(long t) const {
    auto it = weights.find(t);
    if (it == weights.end()) throw DomainError("no extraction weight for this node");
    return it->second;
}

ExtractionWeights vandermonde_weights(const ColumnSet& t_set) {
    if (t_set.size() == 0) throw DomainError("weights need at least one node");
    ExtractionWeights out;
    for (std::size_t p = 0; p < t_set.size(); ++p) {
        Rational denom = 1;
        for (std::size_t i = 0; i < t_set.size(); ++i) {
            if (i == p) continue;
            denom *= Rational(t_set.at(p) - t_set.at(i));
        }
        out.weights.emplace(t_set.at(p), Rational(1) / denom);
    }
    return out;
}

Rational node_power_sum(const ColumnSet& t_set, std::size_t q) {
    ExtractionWeights w = vandermonde_weights(t_set);
    Rational acc = 0;
    for (std::size_t i = 0; i < t_set.size(); ++i) {
        Rational tq = 1;
        for (std::size_t e = 0; e < q; ++e) tq *= Rational(t_set.at(i));
        acc += tq * w.at(t_set.at(i));
    }
    return acc;
}

ExactComplex extraction_sum(const std::vector<ExactComplex>& values_on_t,
                            const ColumnSet& t_set) {
    if (values_on_t.size() != t_set.size())
        throw DomainError("one evaluation per node is required");
    ExtractionWeights w = vandermonde_weights(t_set);
    ExactComplex acc;
    for (std::size_t i = 0; i < t_set.size(); ++i)
        acc += ExactComplex(w.at(t_set.at(i))) * values_on_t[i];
    return acc;
}

ExactComplex extract_coefficient(const std::vector<ExactComplex>& values_on_t,
                                 const ColumnSet& t_set, std::size_t poly_degree,
                                 const std::vector<ExactComplex>& high_coeffs) {
    std::size_t c = t_set.size() - 1;
    if (poly_degree > c && !high_coeffs.empty() && high_coeffs.size() != poly_degree - c)
        throw DomainError("need coefficients of X^{c+1}..X^{deg}");
    return extraction_sum(values_on_t, t_set);
}

ExactComplex multivariate_alternating_sum(
    const std::function<ExactComplex(const std::vector<unsigned>&)>& p_values,
    const std::vector<unsigned>& box) {
    std::vector<unsigned> idx(box.size(), 0);
    ExactComplex acc;
    while (true) {
        Integer weight = 1;
        unsigned long parity = 0;
        for (std::size_t j = 0; j < box.size(); ++j) {
            weight *= binomial(box[j], idx[j]);
            parity += idx[j];
        }
        ExactComplex term = ExactComplex(Rational(weight)) * p_values(idx);
        if (parity % 2 == 0)
            acc += term;
        else
            acc -= term;
        std::size_t j = 0;
        for (; j < box.size(); ++j) {
            if (idx[j] < box[j]) {
                ++idx[j];
                break;
            }
            idx[j] = 0;
        }
        if (j == box.size()) break;
    }
    return acc;
}

Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t p) {
    if (p > values.size()) return 0;
    std::vector<Rational> e(p + 1);
    e[0] = 1;
    for (const Rational& x : values) {
        for (std::size_t j = p; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e[p];
}

Rational symmetric_shift_value(std::size_t p, long big_r, long big_n, long n) {
    if (!(static_cast<long>(p) <= big_r && big_r < big_n))
        throw DomainError("need p <= R < N");
    if (n < 0 || n > big_r) throw DomainError("need n in [0, R]");
    std::vector<Rational> xs;
    for (long x = 1; x <= big_r - n; ++x) xs.emplace_back(x);
    for (long x = big_n - n; x <= big_n; ++x) xs.emplace_back(x);
    return elementary_symmetric(xs, p);
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace lacuna
