#include "schreier/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "schreier/combinatorics.hpp"

namespace schreier {

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::H: return "H";
    }
    return "?";
}

void FamilyParams::validate() const {
    switch (family) {
        case Family::A:
        case Family::B:
            if (s < 1 || p < 1) throw std::invalid_argument("FamilyParams: s and p must be at least 1");
            if (q != 1) throw std::invalid_argument("FamilyParams: q is fixed to 1 for families A and B");
            if (schedule) throw std::invalid_argument("FamilyParams: multiplicity schedules apply to family H only");
            break;
        case Family::D:
            if (u < 2) throw std::invalid_argument("FamilyParams: u must be at least 2");
            if (schedule) throw std::invalid_argument("FamilyParams: multiplicity schedules apply to family H only");
            break;
        case Family::H:
            if (s < 1 || p < 1 || q < 1)
                throw std::invalid_argument("FamilyParams: s, p and q must be at least 1");
            if (schedule) {
                for (int m : *schedule)
                    if (m < 0) throw std::invalid_argument("FamilyParams: schedule entries must be nonnegative");
            }
            break;
    }
}

std::string FamilyParams::describe() const {
    std::ostringstream out;
    out << family_name(family) << "(";
    switch (family) {
        case Family::A:
        case Family::B: out << "s=" << s << ",p=" << p; break;
        case Family::D: out << "u=" << u; break;
        case Family::H: out << "s=" << s << ",p=" << p << ",q=" << q; break;
    }
    out << ")";
    return out.str();
}

std::string SubsetWitness::to_string() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [value, extra] : elements) {
        if (kind == WitnessKind::multiplicity) {
            for (int c = 0; c < extra; ++c) {
                if (!first) out << ", ";
                out << value;
                first = false;
            }
        } else {
            if (!first) out << ", ";
            out << value << "_" << extra;
            first = false;
        }
    }
    out << "}";
    return out.str();
}

long long nth_not_divisible(int u, long long n) {
    if (u < 2) throw std::invalid_argument("nth_not_divisible: u must be at least 2");
    if (n < 1) throw std::invalid_argument("nth_not_divisible: n must be at least 1");
    return floor_div(static_cast<long long>(u) * n - 1, u - 1);
}

GroundMultiset ground_multiset(const FamilyParams& params, int n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("ground_multiset: n must be at least 1");
    GroundMultiset g;
    g.n = n;
    if (params.family == Family::D) {
        for (int i = 1; i <= n; ++i) {
            g.values.push_back(static_cast<int>(nth_not_divisible(params.u, i)));
            g.multiplicities.push_back(1);
        }
        return g;
    }
    const std::vector<int>* sched = nullptr;
    if (params.family == Family::H && params.schedule) {
        if (static_cast<int>(params.schedule->size()) < n)
            throw std::invalid_argument("ground_multiset: schedule must cover values 1..n");
        sched = &*params.schedule;
    }
    for (int v = 1; v <= n; ++v) {
        g.values.push_back(v);
        int cap = sched ? (*sched)[static_cast<size_t>(v - 1)] : (v < n ? params.s : 1);
        g.multiplicities.push_back(cap);
    }
    return g;
}

namespace {

// Shared DFS over the ground values in ascending order. The membership
// condition q*min F >= p*|F| only tightens as elements are added, so a
// branch dies as soon as the committed size plus the mandatory top element
// exceeds floor(q*min/p).
struct DfsState {
    const GroundMultiset& ground;
    long long p = 1, q = 1;
    bool colored = false;
    int colors = 1;  // copies per value in the colored family
    long long budget = kDefaultNodeBudget;
    long long nodes = 0;

    std::vector<std::pair<int, int>> chosen;
    int size = 0;
    int min_value = 0;  // 0 while nothing is chosen yet

    void tick() {
        if (++nodes > budget) throw OracleScaleExceeded(budget);
    }
    bool admissible(long long candidate_min, long long final_size) const {
        return q * candidate_min >= p * final_size;
    }
};

template <typename Emit>
void dfs(DfsState& st, size_t idx, Emit&& emit) {
    st.tick();
    const auto& values = st.ground.values;
    const auto& caps = st.ground.multiplicities;
    const size_t top = values.size() - 1;
    const int value = values[idx];
    const int cap = caps[idx];

    if (idx == top) {
        // The maximum element is mandatory; it is uncolored even in the
        // colored family (a single copy exists).
        for (int m = 1; m <= cap; ++m) {
            const int final_size = st.size + m;
            const long long mn = st.min_value != 0 ? st.min_value : value;
            if (!st.admissible(mn, final_size)) break;  // larger m only worsens it
            st.chosen.emplace_back(value, m);
            emit(st.chosen, final_size);
            st.chosen.pop_back();
        }
        return;
    }

    if (!st.colored) {
        dfs(st, idx + 1, emit);  // multiplicity 0 first: canonical order
        for (int m = 1; m <= cap; ++m) {
            const long long mn = st.min_value != 0 ? st.min_value : value;
            if (!st.admissible(mn, st.size + m + 1)) break;  // +1 for the top
            st.chosen.emplace_back(value, m);
            st.size += m;
            const int saved_min = st.min_value;
            if (st.min_value == 0) st.min_value = value;
            dfs(st, idx + 1, emit);
            st.min_value = saved_min;
            st.size -= m;
            st.chosen.pop_back();
        }
        return;
    }

    // Colored: choose a subset of the value's colors, masks ascending.
    const unsigned mask_end = 1u << st.colors;
    for (unsigned mask = 0; mask < mask_end; ++mask) {
        const int m = std::popcount(mask);
        if (m > cap) continue;
        if (m > 0) {
            const long long mn = st.min_value != 0 ? st.min_value : value;
            if (!st.admissible(mn, st.size + m + 1)) continue;
        }
        const size_t mark = st.chosen.size();
        for (int c = 0; c < st.colors; ++c) {
            if (mask & (1u << c)) st.chosen.emplace_back(value, c + 1);
        }
        st.size += m;
        const int saved_min = st.min_value;
        if (m > 0 && st.min_value == 0) st.min_value = value;
        dfs(st, idx + 1, emit);
        st.min_value = saved_min;
        st.size -= m;
        st.chosen.resize(mark);
    }
}

DfsState make_state(const FamilyParams& params, const GroundMultiset& ground, long long budget) {
    DfsState st{ground};
    st.budget = budget;
    switch (params.family) {
        case Family::A: st.p = params.p; st.q = 1; break;
        case Family::B: st.p = params.p; st.q = 1; st.colored = true; st.colors = params.s; break;
        case Family::D: st.p = 1; st.q = 1; break;
        case Family::H: st.p = params.p; st.q = params.q; break;
    }
    return st;
}

SubsetWitness make_witness(const FamilyParams& params, const std::vector<std::pair<int, int>>& chosen,
                           int size) {
    SubsetWitness w;
    w.kind = params.family == Family::B ? WitnessKind::colored : WitnessKind::multiplicity;
    w.size = size;
    if (w.kind == WitnessKind::colored) {
        w.elements = chosen;
        // The top element was pushed as (value, count); its single copy is color 1.
        w.elements.back().second = 1;
    } else {
        w.elements = chosen;
    }
    return w;
}

}  // namespace

std::vector<SubsetWitness> enumerate_family(const FamilyParams& params, int n, long long node_budget) {
    GroundMultiset ground = ground_multiset(params, n);
    DfsState st = make_state(params, ground, node_budget);
    std::vector<SubsetWitness> out;
    dfs(st, 0, [&](const std::vector<std::pair<int, int>>& chosen, int size) {
        out.push_back(make_witness(params, chosen, size));
    });
    return out;
}

BigInt count_by_enumeration(const FamilyParams& params, int n, long long node_budget) {
    GroundMultiset ground = ground_multiset(params, n);
    DfsState st = make_state(params, ground, node_budget);
    long long count = 0;
    dfs(st, 0, [&](const std::vector<std::pair<int, int>>&, int) { ++count; });
    return count;
}

bool witness_in_family(const FamilyParams& params, int n, const SubsetWitness& w) {
    params.validate();
    if (n < 1 || w.elements.empty()) return false;

    const WitnessKind expected =
        params.family == Family::B ? WitnessKind::colored : WitnessKind::multiplicity;
    if (w.kind != expected) return false;

    // Sorted strictly by (value, second); recompute size.
    int size = 0;
    for (size_t i = 0; i < w.elements.size(); ++i) {
        if (i > 0 && !(w.elements[i - 1] < w.elements[i])) return false;
        size += expected == WitnessKind::multiplicity ? w.elements[i].second : 1;
    }
    if (size != w.size || size < 1) return false;

    GroundMultiset ground = ground_multiset(params, n);
    const int top_value = ground.values.back();

    std::map<int, int> available;
    for (size_t i = 0; i < ground.values.size(); ++i) available[ground.values[i]] = ground.multiplicities[i];

    int top_copies = 0;
    for (const auto& [value, extra] : w.elements) {
        auto it = available.find(value);
        if (it == available.end()) return false;
        if (expected == WitnessKind::multiplicity) {
            if (extra < 1 || extra > it->second) return false;
            if (value == top_value) top_copies += extra;
        } else {
            // One entry per copy; colors must stay within 1..s (the top's
            // single copy is color 1). Distinctness is the sortedness check.
            const int max_color = value == top_value ? 1 : params.s;
            if (extra < 1 || extra > max_color) return false;
            if (value == top_value) ++top_copies;
        }
    }
    if (top_copies < 1) return false;
    if (!params.schedule && top_copies != 1) return false;

    const long long p = params.family == Family::D ? 1 : params.p;
    const long long q = params.family == Family::H ? params.q : 1;
    return q * w.min_value() >= p * static_cast<long long>(w.size);
}

namespace {

std::map<int, int> to_multiset(const SubsetWitness& w) {
    std::map<int, int> m;
    for (const auto& [value, mult] : w.elements) m[value] += mult;
    return m;
}

SubsetWitness from_multiset(const std::map<int, int>& m) {
    SubsetWitness w;
    for (const auto& [value, mult] : m) {
        if (mult < 0) throw std::logic_error("negative multiplicity");
        if (mult == 0) continue;
        w.elements.emplace_back(value, mult);
        w.size += mult;
    }
    return w;
}

void require_psi_args(int i, const FamilyParams& params, int n) {
    if (params.family != Family::A)
        throw std::invalid_argument("psi: defined for the uncolored family A only");
    params.validate();
    if (i < 0 || i > params.s) throw std::invalid_argument("psi: copy count i must lie in 0..s");
    if (n < params.s * params.p + 2)
        throw std::invalid_argument("psi: target index n must be at least s*p + 2");
}

}  // namespace

SubsetWitness psi_apply(int i, const SubsetWitness& f, const FamilyParams& params, int n) {
    require_psi_args(i, params, n);
    const int source_n = n - 1 - i * params.p;
    if (source_n < 1 || !witness_in_family(params, source_n, f))
        throw std::invalid_argument("psi_apply: witness is not in the source family");

    std::map<int, int> m = to_multiset(f);
    if (i == 0) {
        // Swap the single copy of the maximum n-1 for n.
        if (--m[n - 1] == 0) m.erase(n - 1);
        m[n] += 1;
    } else {
        // Shift every element up by i*p, then adjoin i-1 extra copies of
        // n-1 and the new top n.
        std::map<int, int> shifted;
        for (const auto& [value, mult] : m) shifted[value + i * params.p] = mult;
        shifted[n - 1] += i - 1;
        shifted[n] += 1;
        m = std::move(shifted);
    }
    return from_multiset(m);
}

SubsetWitness psi_invert(int i, const SubsetWitness& g, const FamilyParams& params, int n) {
    require_psi_args(i, params, n);
    std::map<int, int> m = to_multiset(g);
    const auto copies_of = [&m](int v) {
        auto it = m.find(v);
        return it == m.end() ? 0 : it->second;
    };
    if (!witness_in_family(params, n, g) || copies_of(n - 1) != i || copies_of(n) != 1)
        throw std::invalid_argument("psi_invert: witness is not in the target class");

    if (i == 0) {
        m.erase(n);
        m[n - 1] += 1;
    } else {
        m.erase(n);
        if ((m[n - 1] -= i - 1) == 0) m.erase(n - 1);
        std::map<int, int> shifted;
        for (const auto& [value, mult] : m) shifted[value - i * params.p] = mult;
        m = std::move(shifted);
    }
    return from_multiset(m);
}

}  // namespace schreier
