#include "schreier/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "schreier/combinatorics.hpp"

namespace schreier {

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const BigInt& c = coeff(i);
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) out[i] -= b.coeffs()[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_compose_power(const IntPolynomial& a, int s) {
    if (s < 1) throw std::invalid_argument("poly_compose_power: exponent must be at least 1");
    if (a.is_zero() || s == 1) return a;
    std::vector<BigInt> out(static_cast<size_t>(a.degree()) * s + 1, BigInt(0));
    for (int i = 0; i <= a.degree(); ++i) {
        out[static_cast<size_t>(i) * s] = a.coeff(i);
    }
    return IntPolynomial(std::move(out));
}

PolyDivRem poly_divrem(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divrem: division by the zero polynomial");
    const BigInt& lead = den.leading_coeff();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("poly_divrem: divisor leading coefficient must be +1 or -1");

    std::vector<BigInt> rem(num.coeffs());
    int dn = den.degree();
    int qdeg = static_cast<int>(rem.size()) - 1 - dn;
    if (qdeg < 0) return {IntPolynomial(), num};

    std::vector<BigInt> quot(static_cast<size_t>(qdeg) + 1, BigInt(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dn; --i) {
        if (rem[static_cast<size_t>(i)] == 0) continue;
        BigInt factor = rem[static_cast<size_t>(i)] * lead;  // lead is +-1
        quot[static_cast<size_t>(i - dn)] = factor;
        for (int j = 0; j <= dn; ++j) {
            rem[static_cast<size_t>(i - dn + j)] -= factor * den.coeff(j);
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool poly_divides(const IntPolynomial& den, const IntPolynomial& num) {
    return poly_divrem(num, den).remainder.is_zero();
}

IntPolynomial build_char_poly(const CharPolySpec& spec) {
    switch (spec.kind) {
        case CharPolyKind::U: {
            if (spec.s < 1 || spec.p < 1)
                throw std::invalid_argument("build_char_poly: U requires s >= 1 and p >= 1");
            std::vector<BigInt> c(static_cast<size_t>(spec.p) * spec.s + 2, BigInt(0));
            c[0] = 1;
            c[1] -= 1;
            c.back() -= 1;  // degree ps+1
            return IntPolynomial(std::move(c));
        }
        case CharPolyKind::V: {
            if (spec.s < 1 || spec.p < 1)
                throw std::invalid_argument("build_char_poly: V requires s >= 1 and p >= 1");
            std::vector<BigInt> c(static_cast<size_t>(spec.s) * spec.p + 2, BigInt(0));
            c[0] = 1;
            for (int i = 0; i <= spec.s; ++i) {
                c[static_cast<size_t>(1 + i * spec.p)] -= binom(spec.s, i);
            }
            return IntPolynomial(std::move(c));
        }
        case CharPolyKind::P: {
            if (spec.u < 2) throw std::invalid_argument("build_char_poly: P requires u >= 2");
            std::vector<BigInt> c(static_cast<size_t>(2) * spec.u, BigInt(0));
            c[0] = 1;
            c[static_cast<size_t>(spec.u)] -= 1;
            c[static_cast<size_t>(2 * spec.u - 1)] -= 1;
            return IntPolynomial(std::move(c));
        }
        case CharPolyKind::Q: {
            if (spec.u < 2) throw std::invalid_argument("build_char_poly: Q requires u >= 2");
            // (1-x)^u - x^{2u-1}
            std::vector<BigInt> c(static_cast<size_t>(2) * spec.u, BigInt(0));
            for (int i = 0; i <= spec.u; ++i) {
                BigInt term = binom(spec.u, i);
                c[static_cast<size_t>(i)] += (i % 2 == 0) ? term : -term;
            }
            c[static_cast<size_t>(2 * spec.u - 1)] -= 1;
            return IntPolynomial(std::move(c));
        }
    }
    throw std::invalid_argument("build_char_poly: unknown kind");
}

bool sequence_satisfies(const IntPolynomial& poly, const BigSequence& seq) {
    if (poly.is_zero() || poly.coeff(0) == 0)
        throw std::invalid_argument("sequence_satisfies: constant coefficient must be nonzero");
    int r = poly.degree();
    long long len = static_cast<long long>(seq.terms.size());
    if (len <= r)
        throw std::invalid_argument("sequence_satisfies: prefix too short to test any index");
    for (long long t = r; t < len; ++t) {
        BigInt acc = 0;
        for (int i = 0; i <= r; ++i) {
            acc += poly.coeff(i) * seq.terms[static_cast<size_t>(t - i)];
        }
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace schreier
