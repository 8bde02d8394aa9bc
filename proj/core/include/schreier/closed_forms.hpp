#pragma once

#include <variant>

#include "schreier/bigint.hpp"
#include "schreier/families.hpp"
#include "schreier/sequence.hpp"

namespace schreier {

// Binomial-sum evaluation of the uncolored count, valid only on the initial
// window 1 <= n <= sp+1 (the window where the double sum collapses to a
// single binomial per term):
//   sum_{k=1}^{floor((sn+1)/(sp+1))} C(n-pk+k-2, k-1).
// Throws std::invalid_argument outside the window.
BigInt count_A_initial(int s, int p, int n);

// Full closed form of the uncolored count, valid for all n >= 1:
//   sum_{k=1}^{floor((sn+1)/(sp+1))} [k-element subsets] with the k-th term
// evaluated as bounded_box_count(n-pk, k-1, s+1).
BigInt count_A_closed(int s, int p, int n);

// Closed form of the colored count: sum_{k} C((n-kp)s, k-1).
BigInt count_B_closed(int s, int p, int n);

// Closed form of the divisor-free count:
//   sum_{k=1}^{floor(((n+1)u-1)/(2u-1))} C(n-k+floor((k-1)/u), k-1).
BigInt count_D_closed(int u, int n);

// Closed form of the general-condition count (q*min F >= p|F|):
// the k-th term is bounded_box_count(n - ceil(pk/q), k-1, s+1) with
// k up to floor((nsq+q)/(sp+q)). q = 1 reduces to count_A_closed.
BigInt count_H_closed(int s, int p, int q, int n);

// Dispatch on the family; schedules have no closed form and are rejected.
BigInt count_closed(const FamilyParams& params, int n);

enum class ParentMethod { recursive, closed };

// Parent sequence of the colored family: (p-1)s zeros, then ones through
// index ps+1, then b_n = b_{n-1} + b_{n-1-ps}. The closed method evaluates
//   sum_i C(n - s(p-1) - 1 - spi, i)  for 0 <= i <= floor((n-s(p-1)-1)/(sp+1)).
BigInt parent_b(int s, int p, long long n, ParentMethod method = ParentMethod::recursive);

// Parent sequence of the divisor-free family: ones through index 2u-1,
// then d_n = d_{n-u} + d_{n-2u+1}. The closed method evaluates
//   sum_i C(floor((n+(u-1)i-u)/(2u-1)), i)  for 0 <= i <= floor((n-1)/u).
BigInt parent_d(int u, long long n, ParentMethod method = ParentMethod::recursive);

struct ParentB {
    int s = 1, p = 1;
};
struct ParentD {
    int u = 2;
};
using SequenceDescriptor = std::variant<FamilyParams, ParentB, ParentD>;

// Terms 1..n_max of a family count or parent sequence. Family counts come
// from the closed forms (defined at every index); parents are evaluated
// bottom-up. The result carries a human-readable provenance tag.
BigSequence sequence_of(const SequenceDescriptor& what, int n_max);

}  // namespace schreier
