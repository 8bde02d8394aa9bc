#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "schreier/bigint.hpp"

namespace schreier {

// A finite, contiguously indexed run of exact integers. start_index is
// usually 1; OEIS references keep whatever offset their b-file uses.
struct BigSequence {
    long long start_index = 1;
    std::vector<BigInt> terms;
    std::string provenance;

    long long end_index() const {
        return start_index + static_cast<long long>(terms.size()) - 1;
    }
    bool has(long long index) const {
        return index >= start_index && index <= end_index();
    }
    const BigInt& at(long long index) const {
        if (!has(index)) throw std::out_of_range("BigSequence: index " + std::to_string(index) + " outside " + std::to_string(start_index) + ".." + std::to_string(end_index()));
        return terms[static_cast<size_t>(index - start_index)];
    }

    bool operator==(const BigSequence& other) const {
        return start_index == other.start_index && terms == other.terms;
    }
};

}  // namespace schreier
