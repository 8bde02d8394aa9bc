#pragma once

#include <stdexcept>
#include <vector>

#include "schreier/bigint.hpp"
#include "schreier/families.hpp"

namespace schreier {

// Hard cap on DFS nodes per enumeration call; chosen so every table-range
// cell (n <= 12) finishes in well under a second.
inline constexpr long long kDefaultNodeBudget = 10'000'000;

// Thrown when a single enumeration would visit more than its node budget.
class OracleScaleExceeded : public std::runtime_error {
public:
    explicit OracleScaleExceeded(long long budget)
        : std::runtime_error("oracle scale exceeded: enumeration budget of " + std::to_string(budget) + " nodes"),
          budget_(budget) {}
    long long budget() const { return budget_; }

private:
    long long budget_;
};

// n-th positive integer not divisible by u; equals floor((u*n - 1)/(u - 1)).
// Requires u >= 2, n >= 1.
long long nth_not_divisible(int u, long long n);

// The value pool for (params, n); for D this is the first n non-multiples
// of u, otherwise values 1..n with s copies each below the top.
GroundMultiset ground_multiset(const FamilyParams& params, int n);

// Every qualifying subset, exactly once, in the canonical DFS order:
// values ascending, and per value multiplicity 0..s ascending (colored:
// color bitmasks ascending). Throws OracleScaleExceeded past the budget.
std::vector<SubsetWitness> enumerate_family(const FamilyParams& params, int n,
                                            long long node_budget = kDefaultNodeBudget);

// |enumerate_family(params, n)| without materializing the witnesses.
BigInt count_by_enumeration(const FamilyParams& params, int n,
                            long long node_budget = kDefaultNodeBudget);

// The partition bijections behind the uncolored recurrence: psi_apply maps
// a witness of A(s,p) at top index n-1-ip to the class of subsets at top
// index n containing exactly i copies of n-1 (branch i = 0 swaps the
// maximum for n; branch i >= 1 shifts by ip and adjoins the new top
// elements). psi_invert is its inverse. Both require n >= sp+2 and check
// membership of their argument, throwing std::invalid_argument with a
// distinct message per violated precondition.
SubsetWitness psi_apply(int i, const SubsetWitness& f, const FamilyParams& params, int n);
SubsetWitness psi_invert(int i, const SubsetWitness& g, const FamilyParams& params, int n);

// Membership test used by the psi preconditions and the property tests.
bool witness_in_family(const FamilyParams& params, int n, const SubsetWitness& w);

}  // namespace schreier
