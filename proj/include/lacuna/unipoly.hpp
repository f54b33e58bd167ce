#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lacuna/exact.hpp"

namespace lacuna {

inline constexpr std::size_t kDefaultDegreeCap = 1'000'000;

// Univariate polynomial over ExactComplex. Coefficient at index k is the
// coefficient of z^k; the vector never stores high-order zeros. The zero
// polynomial is the empty vector and reports degree() == -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<ExactComplex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<ExactComplex> coeffs)
        : coeffs_(coeffs) { trim(); }

    static UniPoly monomial(const ExactComplex& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    // Zero beyond the stored degree.
    const ExactComplex& coeff(std::size_t k) const {
        static const ExactComplex zero{};
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const std::vector<ExactComplex>& coeffs() const { return coeffs_; }

    ExactComplex eval(const ExactComplex& z) const;

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const ExactComplex& c, const UniPoly& p);
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.coeffs_ == q.coeffs_; }

    // p^e, checking the resulting coefficient count against cap.
    UniPoly pow(unsigned long e, std::size_t cap = kDefaultDegreeCap) const;

    // Multiplies by z^k.
    UniPoly shifted(std::size_t k) const;

  private:
    void trim();
    std::vector<ExactComplex> coeffs_;
};

// (valuation, lowest nonzero coefficient). Throws DomainError on the zero
// polynomial.
std::pair<std::size_t, ExactComplex> trailing_data(const UniPoly& p);

// Taylor coefficients s_0..s_order of 1/v(z)^n at the origin. Requires
// v(0) != 0; throws SingularDenominatorError otherwise.
std::vector<ExactComplex> series_inverse_power(const UniPoly& v, unsigned long n,
                                               std::size_t order);

// Monic gcd over the exact coefficient field.
UniPoly poly_gcd(UniPoly p, UniPoly q);

}  // namespace lacuna
