#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schreier/bigint.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/families.hpp"
#include "schreier/polynomial.hpp"
#include "schreier/sequence.hpp"

namespace schreier {

// A gapped linear recurrence a_n = sum_j coeffs[j] * a_{n - offsets[j]},
// applicable from valid_from onward, with seed terms covering every index
// in [seeds.start_index, valid_from).
struct RecurrenceSchema {
    std::vector<int> offsets;   // strictly increasing, all >= 1
    std::vector<BigInt> coeffs; // parallel to offsets; zeros allowed
    BigSequence seeds;
    long long valid_from = 1;

    int max_offset() const { return offsets.empty() ? 0 : offsets.back(); }

    // Throws std::invalid_argument when the invariants fail: nonempty
    // parallel offset/coeff lists, strictly increasing positive offsets,
    // seeds contiguous up to valid_from, and lookback staying inside seeds.
    void validate() const;

    // 1 - c_1 x^{o_1} - ... - c_r x^{o_r}: the polynomial the generated
    // sequence satisfies.
    IntPolynomial characteristic_polynomial() const;
};

// The three recurrence theorems: the uncolored family (unit coefficients,
// gap p), the colored family (Pascal-row coefficients, gap p), and the
// divisor-free family (alternating Pascal row plus a far tap at 2u-1).
enum class TheoremId { A, B, D };

const char* theorem_name(TheoremId t);

// Build the theorem's schema for the given family parameters. Seeds come
// from the closed forms (never enumeration), so evaluation scales past the
// oracle bound. Duplicate offsets are coefficient-merged.
RecurrenceSchema schema_for(TheoremId theorem, const FamilyParams& params);

// Terms from seeds.start_index to n_max: seeds verbatim below valid_from,
// then the recurrence. Linear time in n_max.
BigSequence eval_recurrence(const RecurrenceSchema& schema, long long n_max);

struct TheoremCell {
    long long n = 0;
    BigInt by_recurrence;
    BigInt by_closed_form;
    std::optional<BigInt> by_enumeration;  // absent when past the oracle bound
    bool agree = false;
};

struct TheoremReport {
    TheoremId theorem;
    FamilyParams params;
    long long n_max = 0;
    bool pass = false;
    std::vector<TheoremCell> cells;
};

struct VerifyOptions {
    bool include_enumeration = true;
    long long node_budget = kDefaultNodeBudget;
};

// Three-way comparison of recurrence evaluation, closed form, and (within
// the budget) enumeration at every index 1..n_max. Disagreement is a
// report outcome, never an exception.
TheoremReport verify_theorem(TheoremId theorem, const FamilyParams& params, long long n_max,
                             const VerifyOptions& options = {});

// Minimal-order constant-coefficient linear recurrence with contiguous
// offsets 1..r fitted to the whole prefix by exact rational elimination.
// Requires seq length >= 2*max_order + margin; the surplus rows beyond the
// fitting window act as predicted-and-confirmed terms. Returns nothing
// when no order <= max_order fits (interior zero coefficients are kept;
// rendering drops them).
std::optional<RecurrenceSchema> discover_recurrence(const BigSequence& seq, int max_order,
                                                    int margin = 4);

// "a_n = a_{n-1} + 2a_{n-2}"-style rendering; zero-coefficient taps are
// omitted.
std::string format_recurrence(const RecurrenceSchema& schema);

}  // namespace schreier
