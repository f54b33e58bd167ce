#pragma once

#include <functional>
#include <map>
#include <vector>

#include "lacuna/exact.hpp"

namespace lacuna {

// A strictly increasing set of nonnegative integers. Used both for the
// column selections T of Bautin blocks (values >= 1, validated by the
// diagram) and for the evaluation nodes of the extraction identity
// (values >= 0).
struct ColumnSet {
    std::vector<long> values;

    ColumnSet() = default;
    explicit ColumnSet(std::vector<long> v);

    std::size_t size() const { return values.size(); }
    long at(std::size_t i) const { return values[i]; }

    // The prefix {t_1, ..., t_j}.
    ColumnSet prefix(std::size_t j) const;

    friend bool operator==(const ColumnSet& x, const ColumnSet& y) {
        return x.values == y.values;
    }
};

// Cramer weights K_{T,t} = 1 / prod_{i != p} (t_p - t_i): evaluating a
// polynomial of degree <= |T|-1 on T and summing with these weights reads
// off its top coefficient.
struct ExtractionWeights {
    std::map<long, Rational> weights;

    const Rational& at(long t) const;
};

ExtractionWeights vandermonde_weights(const ColumnSet& t_set);

// sum_t t^q K_{T,t}. Equals 1 for q = |T|-1 and 0 for smaller q; for
// larger q these are the correction factors of the extraction identity.
Rational node_power_sum(const ColumnSet& t_set, std::size_t q);

// Weighted sum  sum_{t in T} P(t) K_{T,t}  from the evaluations of P on T.
// For deg(P) <= c = |T|-1 this is coeff_{X^c}(P); for larger degrees it is
//   coeff_{X^c}(P) + sum_{q > c} coeff_{X^q}(P) * node_power_sum(T, q).
ExactComplex extraction_sum(const std::vector<ExactComplex>& values_on_t,
                            const ColumnSet& t_set);

// extraction_sum with the caller's degree bookkeeping: when poly_degree
// exceeds c, high_coeffs (coeff_{c+1}..coeff_{deg}, possibly empty) must
// have matching arity.
ExactComplex extract_coefficient(const std::vector<ExactComplex>& values_on_t,
                                 const ColumnSet& t_set, std::size_t poly_degree,
                                 const std::vector<ExactComplex>& high_coeffs = {});

// sum over the box [0,w_1] x ... x [0,w_k] of
//   (-1)^{i_1+...+i_k} binom(w_1,i_1)...binom(w_k,i_k) P(i);
// vanishes whenever the total degree of P is below w_1 + ... + w_k.
ExactComplex multivariate_alternating_sum(
    const std::function<ExactComplex(const std::vector<unsigned>&)>& p_values,
    const std::vector<unsigned>& box);

// p-th elementary symmetric polynomial by the prefix recurrence; returns 0
// for p > |values| by convention.
Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t p);

// f_p^{R,N}(n) = sigma_p(1, ..., R-n, N-n, ..., N); as a function of n this
// agrees with one polynomial of degree p on [0, R].
Rational symmetric_shift_value(std::size_t p, long big_r, long big_n, long n);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace lacuna
