#include "schreier/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "schreier/closed_forms.hpp"
#include "schreier/combinatorics.hpp"
#include "schreier/polynomial.hpp"

namespace schreier {

namespace identity_detail {

BigInt count_side_term(int u, long long n, long long k) {
    return binom(floor_div(static_cast<long long>(u) * n - (u - 1) * k, u) - 1, k);
}

BigInt parent_side_term(int u, long long n, long long j) {
    return binom(floor_div(static_cast<long long>(u) * n + (u - 1) * j, 2LL * u - 1) - 1, j);
}

long long count_side_anchor(int u, long long ell) {
    return static_cast<long long>(u) * (ell + 1) - 1;
}

long long parent_side_anchor(int u, long long n, long long ell) {
    return n - (2LL * u - 1) * (ell + 1);
}

long long anchor_limit(int u, long long n) {
    return floor_div(n - 2LL * u + 1, 2LL * u - 1);
}

}  // namespace identity_detail

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::EE4: return "EE4";
        case IdentityId::EE5: return "EE5";
        case IdentityId::EE10: return "EE10";
        case IdentityId::E11: return "E11";
        case IdentityId::OOT: return "OOT";
        case IdentityId::SUBSEQ_B: return "SUBSEQ_B";
        case IdentityId::SUBSEQ_D: return "SUBSEQ_D";
        case IdentityId::DIV_UV: return "DIV_UV";
        case IdentityId::DIV_PQ: return "DIV_PQ";
        case IdentityId::MSTEP_A: return "MSTEP_A";
        case IdentityId::FIRST_D_FIB: return "FIRST_D_FIB";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (IdentityId id : {IdentityId::EE4, IdentityId::EE5, IdentityId::EE10, IdentityId::E11,
                          IdentityId::OOT, IdentityId::SUBSEQ_B, IdentityId::SUBSEQ_D,
                          IdentityId::DIV_UV, IdentityId::DIV_PQ, IdentityId::MSTEP_A,
                          IdentityId::FIRST_D_FIB}) {
        if (name == identity_name(id)) return id;
    }
    return std::nullopt;
}

std::string IdentityCheck::lhs_str() const {
    if (const auto* b = std::get_if<bool>(&lhs)) return *b ? "true" : "false";
    return std::get<BigInt>(lhs).str();
}

std::string IdentityCheck::rhs_str() const {
    if (const auto* b = std::get_if<bool>(&rhs)) return *b ? "true" : "false";
    return std::get<BigInt>(rhs).str();
}

namespace {

using namespace identity_detail;

IdentityCheck make_check(BigInt lhs, BigInt rhs) {
    IdentityCheck c;
    c.equal = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

IdentityCheck make_check(bool lhs, bool rhs) {
    return IdentityCheck{lhs, rhs, lhs == rhs};
}

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

BigInt fibonacci_binomial_sum(long long n) {
    BigInt total = 0;
    for (long long i = 0; i <= floor_div(n - 1, 2); ++i) total += binom(n - i - 1, i);
    return total;
}

}  // namespace

IdentityCheck check_identity(IdentityId id, const IdentityParams& params) {
    const int u = params.u;
    const long long n = params.n;
    switch (id) {
        case IdentityId::EE4: {
            require(u >= 2 && n >= 2LL * u, "EE4 requires u >= 2 and n >= 2u");
            BigInt lhs = 0;
            for (long long k = 0; k < count_side_anchor(u, 0); ++k) lhs += count_side_term(u, n, k);
            BigInt rhs = 0;
            for (long long j = parent_side_anchor(u, n, 0) + 1; j <= n - 1; ++j)
                rhs += parent_side_term(u, n, j);
            return make_check(std::move(lhs), std::move(rhs));
        }
        case IdentityId::EE5: {
            require(u >= 2 && n >= 2LL * u, "EE5 requires u >= 2 and n >= 2u");
            const long long ell = anchor_limit(u, n);
            BigInt lhs = 0;
            for (long long k = count_side_anchor(u, ell) + 1; k <= floor_div(n * u - u, 2LL * u - 1); ++k)
                lhs += count_side_term(u, n, k);
            BigInt rhs = 0;
            for (long long j = 0; j < parent_side_anchor(u, n, ell); ++j)
                rhs += parent_side_term(u, n, j);
            return make_check(std::move(lhs), std::move(rhs));
        }
        case IdentityId::EE10: {
            require(u >= 2 && n >= 1 && n <= 2LL * u - 1, "EE10 requires u >= 2 and 1 <= n <= 2u-1");
            return make_check(count_D_closed(u, static_cast<int>(n)), fibonacci_binomial_sum(n));
        }
        case IdentityId::E11: {
            require(u >= 2 && n >= 1 && n <= 2LL * u - 1, "E11 requires u >= 2 and 1 <= n <= 2u-1");
            return make_check(BigInt(floor_div((n - 1) * u, 2LL * u - 1)), BigInt(floor_div(n - 1, 2)));
        }
        case IdentityId::OOT: {
            require(n >= 1, "OOT requires n >= 1");
            return make_check(mstep_fibonacci(2, n), fibonacci_binomial_sum(n));
        }
        case IdentityId::SUBSEQ_B: {
            require(params.s >= 1 && params.p >= 1 && n >= 1, "SUBSEQ_B requires s, p, n >= 1");
            return make_check(count_B_closed(params.s, params.p, static_cast<int>(n)),
                              parent_b(params.s, params.p, n * params.s - params.s + 1, ParentMethod::closed));
        }
        case IdentityId::SUBSEQ_D: {
            require(u >= 2 && n >= 1, "SUBSEQ_D requires u >= 2 and n >= 1");
            return make_check(count_D_closed(u, static_cast<int>(n)),
                              parent_d(u, static_cast<long long>(u) * n - (u - 1), ParentMethod::closed));
        }
        case IdentityId::DIV_UV: {
            require(params.s >= 1 && params.p >= 1, "DIV_UV requires s >= 1 and p >= 1");
            const IntPolynomial divisor = build_char_poly(CharPolySpec::make_u(params.s, params.p));
            const IntPolynomial target =
                poly_compose_power(build_char_poly(CharPolySpec::make_v(params.s, params.p)), params.s);
            return make_check(poly_divides(divisor, target), true);
        }
        case IdentityId::DIV_PQ: {
            require(u >= 2, "DIV_PQ requires u >= 2");
            const IntPolynomial divisor = build_char_poly(CharPolySpec::make_p(u));
            const IntPolynomial target = poly_compose_power(build_char_poly(CharPolySpec::make_q(u)), u);
            return make_check(poly_divides(divisor, target), true);
        }
        case IdentityId::MSTEP_A: {
            require(params.s >= 1 && n >= 1, "MSTEP_A requires s >= 1 and n >= 1");
            return make_check(count_A_closed(params.s, 1, static_cast<int>(n)),
                              mstep_fibonacci(params.s + 1, n));
        }
        case IdentityId::FIRST_D_FIB: {
            require(u >= 2 && n >= 1 && n <= 2LL * u - 1,
                    "FIRST_D_FIB requires u >= 2 and 1 <= n <= 2u-1");
            return make_check(count_D_closed(u, static_cast<int>(n)), mstep_fibonacci(2, n));
        }
    }
    throw std::invalid_argument("check_identity: unknown identity");
}

namespace {

struct DomainShape {
    bool uses_u = false, uses_n = false, uses_s = false, uses_p = false;
    bool n_lo_is_2u = false;          // EE4/EE5: n starts at 2u
    bool n_hi_is_2u_minus_1 = false;  // EE10/E11/FIRST_D_FIB: n ends at 2u-1
};

DomainShape domain_of(IdentityId id) {
    DomainShape d;
    switch (id) {
        case IdentityId::EE4:
        case IdentityId::EE5:
            d.uses_u = d.uses_n = true;
            d.n_lo_is_2u = true;
            break;
        case IdentityId::EE10:
        case IdentityId::E11:
        case IdentityId::FIRST_D_FIB:
            d.uses_u = d.uses_n = true;
            d.n_hi_is_2u_minus_1 = true;
            break;
        case IdentityId::OOT:
            d.uses_n = true;
            break;
        case IdentityId::SUBSEQ_B:
            d.uses_s = d.uses_p = d.uses_n = true;
            break;
        case IdentityId::SUBSEQ_D:
            d.uses_u = d.uses_n = true;
            break;
        case IdentityId::DIV_UV:
            d.uses_s = d.uses_p = true;
            break;
        case IdentityId::DIV_PQ:
            d.uses_u = true;
            break;
        case IdentityId::MSTEP_A:
            d.uses_s = d.uses_n = true;
            break;
    }
    return d;
}

}  // namespace

SweepReport sweep(IdentityId id, const SweepRanges& ranges) {
    const DomainShape shape = domain_of(id);
    const auto need = [&](const std::optional<IntRange>& r, const char* name) -> IntRange {
        if (!r) throw std::invalid_argument(std::string("sweep: identity needs a range for ") + name);
        return *r;
    };

    SweepReport report;
    report.id = id;

    const IntRange u_range = shape.uses_u ? need(ranges.u, "u") : IntRange{0, 0};
    const IntRange s_range = shape.uses_s ? need(ranges.s, "s") : IntRange{0, 0};
    const IntRange p_range = shape.uses_p ? need(ranges.p, "p") : IntRange{0, 0};
    const IntRange n_range = shape.uses_n ? need(ranges.n, "n") : IntRange{0, 0};

    for (long long u = u_range.lo; u <= u_range.hi; ++u) {
        for (long long s = s_range.lo; s <= s_range.hi; ++s) {
            for (long long p = p_range.lo; p <= p_range.hi; ++p) {
                long long lo = n_range.lo, hi = n_range.hi;
                if (shape.uses_n) {
                    if (shape.n_lo_is_2u) lo = std::max(lo, 2 * u);
                    if (shape.n_hi_is_2u_minus_1) hi = std::min(hi, 2 * u - 1);
                }
                for (long long n = lo; n <= hi; ++n) {
                    IdentityParams params;
                    params.u = static_cast<int>(u);
                    params.s = static_cast<int>(s);
                    params.p = static_cast<int>(p);
                    params.n = n;
                    IdentityCheck check = check_identity(id, params);
                    ++report.checked;
                    if (!check.equal) report.failures.push_back({params, std::move(check)});
                }
            }
        }
    }
    if (report.checked == 0)
        throw std::invalid_argument("sweep: the requested ranges cover no cell of the identity's domain");
    report.pass = report.failures.empty();
    return report;
}

}  // namespace schreier
