#pragma once

#include <cstdint>

#include "schreier/bigint.hpp"

namespace schreier {

// Floor division, rounding toward -inf. Requires b > 0.
constexpr long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

// Ceiling division, rounding toward +inf. Requires b > 0.
constexpr long long ceil_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

// Binomial coefficient C(top, bottom) on all integer pairs:
//   C(a, 0) = 1 for every a (including a < 0),
//   C(a, b) = 0 when b < 0, when 0 <= a < b, and when a < 0 < b,
//   the standard value otherwise.
// The C(a, 0) = 1 rule for negative a is what lets the empty-selection
// terms of the counting formulas contribute 1 instead of vanishing.
BigInt binom(long long top, long long bottom);

// Number of ways to distribute m identical objects into n labeled boxes,
// each box holding at most s - 1 objects:
//   sum_{k=0}^{floor(m/s)} (-1)^k C(n,k) C(n+m-sk-1, n-1).
// The n = 0 boundary follows the distribution count (1 iff m = 0), which
// the alternating sum does not reproduce on its own.
// Requires n >= 0, m >= 0, s >= 1; throws std::invalid_argument otherwise.
BigInt bounded_box_count(long long n, long long m, long long s);

// m-step Fibonacci number F^(m)_n: seeds F^(m)_{2-m} = ... = F^(m)_0 = 0,
// F^(m)_1 = 1, and each later term is the sum of the previous m terms.
// m = 2 gives the Fibonacci numbers. Requires m >= 2 and n >= 2 - m.
BigInt mstep_fibonacci(int m, long long n);

}  // namespace schreier
