#pragma once

#include <optional>
#include <string>
#include <vector>

namespace schreier {

// The four counting families.
//   A: multiset subsets, s copies of each value below the top, min F >= p|F|
//   B: as A but the s copies carry distinct colors (copies distinguishable)
//   D: plain subsets of the first n integers not divisible by u, min F >= |F|
//   H: as A with the general condition q*min F >= p|F|
enum class Family { A, B, D, H };

const char* family_name(Family f);

struct FamilyParams {
    Family family = Family::A;
    int s = 1;  // copies per value (A, B, H)
    int p = 1;  // condition numerator (A, B, H)
    int q = 1;  // condition denominator (H; forced to 1 for A and B)
    int u = 2;  // forbidden divisor (D)

    // H only: explicit per-value multiplicities for values 1..n. Entry i-1
    // bounds value i; when enumerating at top index n the schedule must
    // cover n values. Overrides the default (s,...,s,1) profile.
    std::optional<std::vector<int>> schedule;

    static FamilyParams uncolored(int s, int p) { return {Family::A, s, p, 1, 2, {}}; }
    static FamilyParams colored(int s, int p) { return {Family::B, s, p, 1, 2, {}}; }
    static FamilyParams divisor_free(int u) { return {Family::D, 1, 1, 1, u, {}}; }
    static FamilyParams general(int s, int p, int q) { return {Family::H, s, p, q, 2, {}}; }

    // Throws std::invalid_argument when fields are inconsistent with the family.
    void validate() const;

    std::string describe() const;  // e.g. "A(s=2,p=1)"
};

// How a SubsetWitness's element pairs are to be read.
enum class WitnessKind {
    multiplicity,  // (value, copy count), one entry per distinct value
    colored,       // (value, color), one entry per chosen copy
};

// One qualifying subset. Entries are sorted ascending; size counts
// multiplicity (uncolored) or chosen copies (colored).
struct SubsetWitness {
    WitnessKind kind = WitnessKind::multiplicity;
    std::vector<std::pair<int, int>> elements;
    int size = 0;

    int min_value() const { return elements.front().first; }
    int max_value() const { return elements.back().first; }

    auto operator<=>(const SubsetWitness&) const = default;
    std::string to_string() const;  // "{2, 3}" / "{4, 4, 5}" / colored "{2_1, 3}"
};

// The pool a family's subsets are drawn from at top index n: candidate
// values in ascending order with the number of available copies of each.
struct GroundMultiset {
    int n = 0;
    std::vector<int> values;
    std::vector<int> multiplicities;
};

}  // namespace schreier
