#include "schreier/closed_forms.hpp"

#include <stdexcept>
#include <vector>

#include "schreier/combinatorics.hpp"

namespace schreier {

namespace {

void require_positive(int value, const char* name) {
    if (value < 1) throw std::invalid_argument(std::string(name) + " must be at least 1");
}

}  // namespace

BigInt count_A_initial(int s, int p, int n) {
    require_positive(s, "count_A_initial: s");
    require_positive(p, "count_A_initial: p");
    if (n < 1 || n > s * p + 1)
        throw std::invalid_argument("count_A_initial: n outside the window 1..sp+1");
    const long long kmax = floor_div(static_cast<long long>(s) * n + 1,
                                     static_cast<long long>(s) * p + 1);
    BigInt total = 0;
    for (long long k = 1; k <= kmax; ++k) {
        total += binom(n - p * k + k - 2, k - 1);
    }
    return total;
}

BigInt count_A_closed(int s, int p, int n) {
    return count_H_closed(s, p, 1, n);
}

BigInt count_B_closed(int s, int p, int n) {
    require_positive(s, "count_B_closed: s");
    require_positive(p, "count_B_closed: p");
    require_positive(n, "count_B_closed: n");
    const long long kmax = floor_div(static_cast<long long>(n) * s + 1,
                                     static_cast<long long>(p) * s + 1);
    BigInt total = 0;
    for (long long k = 1; k <= kmax; ++k) {
        total += binom((n - k * p) * s, k - 1);
    }
    return total;
}

BigInt count_D_closed(int u, int n) {
    if (u < 2) throw std::invalid_argument("count_D_closed: u must be at least 2");
    require_positive(n, "count_D_closed: n");
    const long long kmax = floor_div((static_cast<long long>(n) + 1) * u - 1, 2LL * u - 1);
    BigInt total = 0;
    for (long long k = 1; k <= kmax; ++k) {
        total += binom(n - k + floor_div(k - 1, u), k - 1);
    }
    return total;
}

BigInt count_H_closed(int s, int p, int q, int n) {
    require_positive(s, "count_H_closed: s");
    require_positive(p, "count_H_closed: p");
    require_positive(q, "count_H_closed: q");
    require_positive(n, "count_H_closed: n");
    const long long kmax = floor_div(static_cast<long long>(n) * s * q + q,
                                     static_cast<long long>(s) * p + q);
    BigInt total = 0;
    for (long long k = 1; k <= kmax; ++k) {
        // k-element subsets are determined by k-1 values of multiplicity
        // <= s drawn from the ceil(pk/q)..n-1 range.
        const long long boxes = n - ceil_div(static_cast<long long>(p) * k, q);
        total += bounded_box_count(boxes, k - 1, s + 1);
    }
    return total;
}

BigInt count_closed(const FamilyParams& params, int n) {
    params.validate();
    require_positive(n, "count_closed: n");
    if (params.schedule)
        throw std::invalid_argument("count_closed: multiplicity schedules have no closed form; enumerate instead");
    switch (params.family) {
        case Family::A: return count_A_closed(params.s, params.p, n);
        case Family::B: return count_B_closed(params.s, params.p, n);
        case Family::D: return count_D_closed(params.u, n);
        case Family::H: return count_H_closed(params.s, params.p, params.q, n);
    }
    throw std::invalid_argument("count_closed: unknown family");
}

namespace {

std::vector<BigInt> parent_b_prefix(int s, int p, long long n_max) {
    require_positive(s, "parent_b: s");
    require_positive(p, "parent_b: p");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(n_max));
    const long long zeros = static_cast<long long>(p - 1) * s;
    const long long ones_through = static_cast<long long>(p) * s + 1;
    for (long long n = 1; n <= n_max; ++n) {
        if (n <= zeros) out.emplace_back(0);
        else if (n <= ones_through) out.emplace_back(1);
        else out.push_back(out[static_cast<size_t>(n - 2)] + out[static_cast<size_t>(n - 2 - static_cast<long long>(p) * s)]);
    }
    return out;
}

std::vector<BigInt> parent_d_prefix(int u, long long n_max) {
    if (u < 2) throw std::invalid_argument("parent_d: u must be at least 2");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(n_max));
    for (long long n = 1; n <= n_max; ++n) {
        if (n <= 2LL * u - 1) out.emplace_back(1);
        else out.push_back(out[static_cast<size_t>(n - 1 - u)] + out[static_cast<size_t>(n - 2 * u)]);
    }
    return out;
}

}  // namespace

BigInt parent_b(int s, int p, long long n, ParentMethod method) {
    require_positive(s, "parent_b: s");
    require_positive(p, "parent_b: p");
    if (n < 1) throw std::invalid_argument("parent_b: n must be at least 1");
    if (method == ParentMethod::recursive) {
        return parent_b_prefix(s, p, n).back();
    }
    const long long base = n - static_cast<long long>(s) * (p - 1) - 1;
    const long long imax = floor_div(base, static_cast<long long>(s) * p + 1);
    BigInt total = 0;
    for (long long i = 0; i <= imax; ++i) {
        total += binom(base - static_cast<long long>(s) * p * i, i);
    }
    return total;
}

BigInt parent_d(int u, long long n, ParentMethod method) {
    if (u < 2) throw std::invalid_argument("parent_d: u must be at least 2");
    if (n < 1) throw std::invalid_argument("parent_d: n must be at least 1");
    if (method == ParentMethod::recursive) {
        return parent_d_prefix(u, n).back();
    }
    const long long imax = floor_div(n - 1, u);
    BigInt total = 0;
    for (long long i = 0; i <= imax; ++i) {
        total += binom(floor_div(n + (u - 1) * i - u, 2LL * u - 1), i);
    }
    return total;
}

BigSequence sequence_of(const SequenceDescriptor& what, int n_max) {
    if (n_max < 1) throw std::invalid_argument("sequence_of: n_max must be at least 1");
    BigSequence seq;
    seq.start_index = 1;
    if (const auto* fp = std::get_if<FamilyParams>(&what)) {
        seq.provenance = fp->describe();
        seq.terms.reserve(static_cast<size_t>(n_max));
        for (int n = 1; n <= n_max; ++n) seq.terms.push_back(count_closed(*fp, n));
    } else if (const auto* pb = std::get_if<ParentB>(&what)) {
        seq.provenance = "parent b(s=" + std::to_string(pb->s) + ",p=" + std::to_string(pb->p) + ")";
        seq.terms = parent_b_prefix(pb->s, pb->p, n_max);
    } else {
        const auto& pd = std::get<ParentD>(what);
        seq.provenance = "parent d(u=" + std::to_string(pd.u) + ")";
        seq.terms = parent_d_prefix(pd.u, n_max);
    }
    return seq;
}

}  // namespace schreier
