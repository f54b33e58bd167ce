#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "lacuna/errors.hpp"

namespace lacuna {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p/q" style strings. Rejects zero denominators instead of
// letting canonicalize() divide by zero.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

// A complex number with exact rational real and imaginary parts. All
// arithmetic is exact; equality is decidable.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() : re(0), im(0) {}
    ExactComplex(long r) : re(r), im(0) {}
    ExactComplex(Rational r) : re(std::move(r)), im(0) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    // |z|^2, exact.
    Rational abs_sq() const { return re * re + im * im; }

    ExactComplex conj() const { return {re, -im}; }

    // Throws DomainError on zero.
    ExactComplex inverse() const;

    std::complex<double> to_complex() const {
        return {re.get_d(), im.get_d()};
    }

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend ExactComplex operator-(const ExactComplex& x) { return {-x.re, -x.im}; }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
        return x * y.inverse();
    }
    ExactComplex& operator+=(const ExactComplex& y) {
        re += y.re;
        im += y.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& y) {
        re -= y.re;
        im -= y.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& y) {
        *this = *this * y;
        return *this;
    }
    friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) {
        return !(x == y);
    }
};

// z^e for e >= 0.
ExactComplex pow(const ExactComplex& z, unsigned long e);

std::string to_string(const ExactComplex& z);

}  // namespace lacuna
