#include "lacuna/unipoly.hpp"

namespace lacuna {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(const ExactComplex& c, std::size_t power) {
    if (c.is_zero()) return UniPoly{};
    std::vector<ExactComplex> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

ExactComplex UniPoly::eval(const ExactComplex& z) const {
    ExactComplex acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<ExactComplex> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) + q.coeff(k);
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<ExactComplex> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(k) - q.coeff(k);
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly{};
    std::vector<ExactComplex> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const ExactComplex& c, const UniPoly& p) {
    std::vector<ExactComplex> out(p.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * p.coeffs_[k];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned long e, std::size_t cap) const {
    if (e == 0) return UniPoly{ExactComplex(1)};
    if (is_zero()) return UniPoly{};
    std::size_t slots = static_cast<std::size_t>(degree()) * e + 1;
    if (slots > cap)
        throw CapacityError("polynomial power needs " + std::to_string(slots) +
                            " coefficient slots, cap is " + std::to_string(cap));
    UniPoly acc{ExactComplex(1)};
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
        e >>= 1;
    }
    return acc;
}

UniPoly UniPoly::shifted(std::size_t k) const {
    if (is_zero()) return UniPoly{};
    std::vector<ExactComplex> out(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return UniPoly(std::move(out));
}

std::pair<std::size_t, ExactComplex> trailing_data(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
    std::size_t k = 0;
    while (p.coeff(k).is_zero()) ++k;
    return {k, p.coeff(k)};
}

std::vector<ExactComplex> series_inverse_power(const UniPoly& v, unsigned long n,
                                               std::size_t order) {
    if (v.is_zero() || v.coeff(0).is_zero())
        throw SingularDenominatorError("series inversion needs v(0) != 0");
    // w = v^n truncated to the requested order, then the standard
    // coefficient recurrence for 1/w.
    std::vector<ExactComplex> w(order + 1);
    {
        UniPoly acc{ExactComplex(1)};
        UniPoly base = v;
        unsigned long e = n;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
            e >>= 1;
            // Keeping full degree here is fine: callers use small v and n.
        }
        for (std::size_t k = 0; k <= order; ++k) w[k] = acc.coeff(k);
    }
    std::vector<ExactComplex> s(order + 1);
    ExactComplex w0_inv = w[0].inverse();
    s[0] = w0_inv;
    for (std::size_t k = 1; k <= order; ++k) {
        ExactComplex acc;
        for (std::size_t j = 1; j <= k; ++j) acc += w[j] * s[k - j];
        s[k] = -(w0_inv * acc);
    }
    return s;
}

UniPoly poly_gcd(UniPoly p, UniPoly q) {
    auto make_monic = [](const UniPoly& f) {
        if (f.is_zero()) return f;
        return f.coeff(static_cast<std::size_t>(f.degree())).inverse() * f;
    };
    while (!q.is_zero()) {
        // p mod q by long division.
        while (!p.is_zero() && p.degree() >= q.degree()) {
            std::size_t shift = static_cast<std::size_t>(p.degree() - q.degree());
            ExactComplex factor =
                p.coeff(static_cast<std::size_t>(p.degree())) /
                q.coeff(static_cast<std::size_t>(q.degree()));
            p = p - factor * q.shifted(shift);
        }
        std::swap(p, q);
    }
    return make_monic(p);
}

}  // namespace lacuna
