#pragma once

#include <utility>
#include <vector>

#include "schreier/bigint.hpp"
#include "schreier/sequence.hpp"

namespace schreier {

// Dense polynomial over BigInt. coeffs()[i] is the coefficient of x^i; the
// highest-index coefficient is nonzero unless the polynomial is zero
// (empty coefficient list, degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial one() { return IntPolynomial({BigInt(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // Coefficient of x^i; zero outside the stored range.
    const BigInt& coeff(int i) const {
        static const BigInt kZero = 0;
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const BigInt& leading_coeff() const { return coeffs_.back(); }

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    std::string to_string() const;  // human-readable, e.g. "1 - x - x^3"

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// a(x^s): spreads a's coefficients onto exponent multiples of s. s >= 1.
IntPolynomial poly_compose_power(const IntPolynomial& a, int s);

struct PolyDivRem {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

// Exact integer long division: num = den*quotient + remainder with
// deg(remainder) < deg(den). The divisor's leading coefficient must be
// +1 or -1 so the quotient stays over the integers; throws
// std::invalid_argument on a zero divisor or a non-unit leading coefficient.
PolyDivRem poly_divrem(const IntPolynomial& num, const IntPolynomial& den);

bool poly_divides(const IntPolynomial& den, const IntPolynomial& num);

// The four characteristic polynomials attached to the counting families:
//   U (s,p):  1 - x - x^{ps+1}                      (parent of the colored family)
//   V (s,p):  1 - sum_{i=0}^{s} C(s,i) x^{1+ip}     (colored family)
//   P (u):    1 - x^u - x^{2u-1}                    (parent of the divisor-free family)
//   Q (u):    (1-x)^u - x^{2u-1}                    (divisor-free family)
enum class CharPolyKind { U, V, P, Q };

struct CharPolySpec {
    CharPolyKind kind;
    int s = 0;  // U, V
    int p = 0;  // U, V
    int u = 0;  // P, Q
    static CharPolySpec make_u(int s, int p) { return {CharPolyKind::U, s, p, 0}; }
    static CharPolySpec make_v(int s, int p) { return {CharPolyKind::V, s, p, 0}; }
    static CharPolySpec make_p(int u) { return {CharPolyKind::P, 0, 0, u}; }
    static CharPolySpec make_q(int u) { return {CharPolyKind::Q, 0, 0, u}; }
};

// U/V require s >= 1 and p >= 1; P/Q require u >= 2.
IntPolynomial build_char_poly(const CharPolySpec& spec);

// True iff c_0 a_n + c_1 a_{n-1} + ... + c_r a_{n-r} = 0 at every position
// of the prefix where the window fits (c_i = poly coefficients, r = degree).
// The prefix must be longer than the degree, and c_0 must be nonzero --
// a vanishing c_0 would silently shift which term the relation predicts.
bool sequence_satisfies(const IntPolynomial& poly, const BigSequence& seq);

}  // namespace schreier
