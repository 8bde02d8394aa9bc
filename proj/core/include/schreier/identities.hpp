#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schreier/bigint.hpp"

namespace schreier {

// Named equalities checked by evaluating both sides literally -- nothing is
// simplified first, so each check genuinely exercises two formulas.
//
//   EE4, EE5      boundary blocks of the divisor-free subsequence identity
//                 (head of the count-side sum vs tail of the parent-side
//                 sum, and vice versa); domain n >= 2u
//   EE10          divisor-free closed form equals the Fibonacci binomial
//                 sum; domain 1 <= n <= 2u-1
//   E11           floor((n-1)u/(2u-1)) = floor((n-1)/2); domain n <= 2u-1
//   OOT           F_n equals its binomial sum
//   SUBSEQ_B      colored count equals parent b at index ns-s+1
//   SUBSEQ_D      divisor-free count equals parent d at index un-(u-1)
//   DIV_UV        u_{s,p}(x) divides v_{s,p}(x^s) exactly
//   DIV_PQ        p_u(x) divides q_u(x^u) exactly
//   MSTEP_A       uncolored count at p = 1 equals the (s+1)-step Fibonacci
//   FIRST_D_FIB   divisor-free count equals F_n on 1 <= n <= 2u-1
enum class IdentityId { EE4, EE5, EE10, E11, OOT, SUBSEQ_B, SUBSEQ_D, DIV_UV, DIV_PQ, MSTEP_A, FIRST_D_FIB };

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

// Free variables of an identity; each identity reads only the fields it
// declares.
struct IdentityParams {
    int u = 0;
    long long n = 0;
    int s = 0;
    int p = 0;
};

struct IdentityCheck {
    std::variant<BigInt, bool> lhs, rhs;
    bool equal = false;
    std::string lhs_str() const;
    std::string rhs_str() const;
};

// Evaluate both sides. Parameters outside the identity's declared domain
// are an error (std::invalid_argument), never a silent skip.
IdentityCheck check_identity(IdentityId id, const IdentityParams& params);

struct IntRange {
    long long lo = 0;
    long long hi = -1;
    bool contains(long long v) const { return v >= lo && v <= hi; }
};

// Ranges for the variables an identity uses; n is intersected with any
// u-dependent domain bound per cell.
struct SweepRanges {
    std::optional<IntRange> u, n, s, p;
};

struct SweepFailure {
    IdentityParams params;
    IdentityCheck check;
};

struct SweepReport {
    IdentityId id;
    long long checked = 0;
    std::vector<SweepFailure> failures;
    bool pass = false;
};

// check_identity over the Cartesian range; PASS iff no cell fails. An
// entirely empty domain is an error so a sweep can never pass vacuously.
SweepReport sweep(IdentityId id, const SweepRanges& ranges);

// Appendix building blocks, exposed for spot-testing; the sweep evaluators
// must use exactly these.
namespace identity_detail {

// Term k of the count-side sum: C(floor((un-(u-1)k)/u) - 1, k).
BigInt count_side_term(int u, long long n, long long k);
// Term j of the parent-side sum: C(floor((un+(u-1)j)/(2u-1)) - 1, j).
BigInt parent_side_term(int u, long long n, long long j);
// Count-side index where block ell of the two sums meets: u(ell+1)-1.
long long count_side_anchor(int u, long long ell);
// Parent-side index of the same meeting point: n-(2u-1)(ell+1).
long long parent_side_anchor(int u, long long n, long long ell);
// Last block index: floor((n-2u+1)/(2u-1)).
long long anchor_limit(int u, long long n);

}  // namespace identity_detail

}  // namespace schreier
