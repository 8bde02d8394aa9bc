#include "schreier/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace schreier {

BigInt binom(long long top, long long bottom) {
    if (bottom == 0) return 1;
    if (bottom < 0) return 0;
    if (top < 0) return 0;   // bottom > 0 here
    if (top < bottom) return 0;
    // Multiplicative form; each partial product is exactly divisible.
    if (bottom > top - bottom) bottom = top - bottom;
    BigInt result = 1;
    for (long long i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i;
    }
    return result;
}

BigInt bounded_box_count(long long n, long long m, long long s) {
    if (s < 1) throw std::invalid_argument("bounded_box_count: capacity bound s must be positive");
    if (n < 0 || m < 0) throw std::invalid_argument("bounded_box_count: n and m must be nonnegative");
    if (n == 0) return m == 0 ? 1 : 0;
    BigInt total = 0;
    for (long long k = 0; k <= m / s; ++k) {
        BigInt term = binom(n, k) * binom(n + m - s * k - 1, n - 1);
        if (k % 2 == 0) total += term; else total -= term;
    }
    return total;
}

BigInt mstep_fibonacci(int m, long long n) {
    if (m < 2) throw std::invalid_argument("mstep_fibonacci: step count m must be at least 2");
    if (n < 2 - static_cast<long long>(m))
        throw std::invalid_argument("mstep_fibonacci: index below the seed range");
    if (n <= 0) return 0;
    if (n == 1) return 1;
    // Rolling window over the last m terms, starting at indices 2-m .. 1.
    std::vector<BigInt> window(static_cast<size_t>(m), BigInt(0));
    window.back() = 1;  // F_1
    BigInt current;
    for (long long i = 2; i <= n; ++i) {
        current = 0;
        for (const BigInt& t : window) current += t;
        window.erase(window.begin());
        window.push_back(current);
    }
    return window.back();
}

}  // namespace schreier
