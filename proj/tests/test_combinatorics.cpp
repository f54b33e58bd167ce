#include <doctest.h>

#include "fixtures.hpp"
#include "lacuna/lemma_suites.hpp"

#include <sstream>

using namespace lacuna;
namespace fx = fixtures;

TEST_SUITE("combinatorics") {

TEST_CASE("Cramer weights on consecutive and gapped nodes") {
    ExtractionWeights w1 = vandermonde_weights(ColumnSet({0, 1, 2}));
    CHECK(w1.at(0) == Rational(1, 2));
    CHECK(w1.at(1) == Rational(-1));
    CHECK(w1.at(2) == Rational(1, 2));

    ExtractionWeights w2 = vandermonde_weights(ColumnSet({1, 2}));
    CHECK(w2.at(1) == Rational(-1));
    CHECK(w2.at(2) == Rational(1));

    ExtractionWeights w3 = vandermonde_weights(ColumnSet({1, 2, 4}));
    CHECK(w3.at(1) == Rational(1, 3));
    CHECK(w3.at(2) == Rational(-1, 2));
    CHECK(w3.at(4) == Rational(1, 6));
}

TEST_CASE("weights on {0..c} follow the binomial formula") {
    for (long c = 0; c <= 6; ++c) {
        std::vector<long> nodes;
        for (long v = 0; v <= c; ++v) nodes.push_back(v);
        ExtractionWeights w = vandermonde_weights(ColumnSet(nodes));
        for (long p = 0; p <= c; ++p) {
            Rational expect = Rational(binomial(c, p)) / Rational(factorial(c));
            if ((c + p) % 2 == 1) expect = -expect;
            CHECK(w.at(p) == expect);
        }
    }
}

TEST_CASE("extraction sums on the documented examples") {
    ColumnSet t({0, 1, 2});
    // P = X^2: evaluations 0, 1, 4.
    std::vector<ExactComplex> sq{ExactComplex(0), ExactComplex(1), ExactComplex(4)};
    CHECK(extract_coefficient(sq, t, 2) == ExactComplex(1));
    // P = X: degree below c.
    std::vector<ExactComplex> lin{ExactComplex(0), ExactComplex(1), ExactComplex(2)};
    CHECK(extract_coefficient(lin, t, 1) == ExactComplex(0));
    // P = X^3: the weighted sum carries the documented correction term.
    std::vector<ExactComplex> cub{ExactComplex(0), ExactComplex(1), ExactComplex(8)};
    CHECK(extract_coefficient(cub, t, 3, {ExactComplex(1)}) == ExactComplex(3));
    CHECK(node_power_sum(t, 3) == Rational(3));
    CHECK_THROWS_AS(extract_coefficient({ExactComplex(1)}, t, 1), DomainError);
}

TEST_CASE("alternating sums vanish below the box weight") {
    auto linear = [](const std::vector<unsigned>& i) {
        return ExactComplex(static_cast<long>(i[0]));
    };
    CHECK(multivariate_alternating_sum(linear, {2}).is_zero());
    auto bilinear = [](const std::vector<unsigned>& i) {
        return ExactComplex(static_cast<long>(i[0] + i[1]));
    };
    CHECK(multivariate_alternating_sum(bilinear, {1, 1}).is_zero());
    auto constant = [](const std::vector<unsigned>&) { return ExactComplex(1); };
    CHECK(multivariate_alternating_sum(constant, {1}).is_zero());
    // At the box weight the sum does not vanish.
    auto quad = [](const std::vector<unsigned>& i) {
        return ExactComplex(static_cast<long>(i[0] * i[0]));
    };
    CHECK(!multivariate_alternating_sum(quad, {2}).is_zero());
}

TEST_CASE("shifted symmetric values") {
    CHECK(symmetric_shift_value(1, 2, 4, 0) == Rational(7));
    CHECK(symmetric_shift_value(1, 2, 4, 1) == Rational(8));
    CHECK(symmetric_shift_value(1, 2, 4, 2) == Rational(9));
    CHECK(symmetric_shift_value(0, 3, 9, 2) == Rational(1));
    CHECK(symmetric_shift_value(2, 2, 4, 0) == Rational(14));
    CHECK_THROWS_AS(symmetric_shift_value(3, 2, 4, 0), DomainError);
}

TEST_CASE("elementary symmetric polynomials") {
    std::vector<Rational> xs{1, 2, 3};
    CHECK(elementary_symmetric(xs, 2) == Rational(11));
    CHECK(elementary_symmetric(xs, 0) == Rational(1));
    CHECK(elementary_symmetric({Rational(5)}, 1) == Rational(5));
    CHECK(elementary_symmetric(xs, 4) == Rational(0));  // p beyond the list
}

TEST_CASE("elementary symmetric recurrence matches enumeration") {
    fx::Rng rng(71);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Rational> xs;
        for (int i = 0; i < 6; ++i) xs.push_back(fx::rnd_rational(rng, 9));
        for (std::size_t p = 0; p <= xs.size(); ++p) {
            // brute force over index subsets
            Rational brute = 0;
            for (unsigned long mask = 0; mask < (1ul << xs.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountl(mask)) != p) continue;
                Rational prod = 1;
                for (std::size_t i = 0; i < xs.size(); ++i)
                    if (mask & (1ul << i)) prod *= xs[i];
                brute += prod;
            }
            CHECK(elementary_symmetric(xs, p) == brute);
        }
    }
}

TEST_CASE("lemma suites pass on a reduced range") {
    std::ostringstream sink;
    CHECK(run_lemma_suites(5, false, sink));
    CHECK_FALSE(run_lemma_suites(5, true, sink));  // negative control
}

}  // TEST_SUITE
