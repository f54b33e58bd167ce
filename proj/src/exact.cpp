#include "lacuna/exact.hpp"

#include <cctype>

namespace lacuna {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
            throw ParseError("bad character in rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("unparsable rational '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

ExactComplex ExactComplex::inverse() const {
    Rational n = abs_sq();
    if (n == 0) throw DomainError("inverse of zero");
    return {re / n, -im / n};
}

ExactComplex pow(const ExactComplex& z, unsigned long e) {
    ExactComplex acc(1);
    ExactComplex base = z;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string to_string(const ExactComplex& z) {
    if (z.im == 0) return rational_to_string(z.re);
    return rational_to_string(z.re) + (z.im > 0 ? "+" : "") + rational_to_string(z.im) + "i";
}

}  // namespace lacuna
