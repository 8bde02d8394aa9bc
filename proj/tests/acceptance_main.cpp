// Acceptance suite: one pass/fail line per criterion, exact integer
// equality throughout (tolerance zero), committed fixtures only -- no
// network. Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "schreier/closed_forms.hpp"
#include "schreier/combinatorics.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/identities.hpp"
#include "schreier/oeis.hpp"
#include "schreier/polynomial.hpp"
#include "schreier/recurrence.hpp"
#include "sequence_fixtures.hpp"

using namespace schreier;

namespace {

const std::filesystem::path kFixtures = SCHREIER_FIXTURE_DIR;

int g_failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << "  " << label;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FamilyParams params_for_row(Family family, const fixtures::FamilyRow& row) {
    switch (family) {
        case Family::A: return FamilyParams::uncolored(row.s, row.p);
        case Family::B: return FamilyParams::colored(row.s, row.p);
        case Family::D: return FamilyParams::divisor_free(row.u);
        default: throw std::logic_error("unexpected family");
    }
}

TheoremId theorem_for(Family family) {
    switch (family) {
        case Family::A: return TheoremId::A;
        case Family::B: return TheoremId::B;
        case Family::D: return TheoremId::D;
        default: throw std::logic_error("unexpected family");
    }
}

// 1. Every cell of the three published tables, by closed form, recurrence
//    evaluation, and brute-force enumeration.
void criterion_tables() {
    std::string detail;
    int cells = 0;
    const auto check_table = [&](Family family, const std::vector<fixtures::FamilyRow>& rows) {
        for (const auto& row : rows) {
            const FamilyParams params = params_for_row(family, row);
            const BigSequence by_rec =
                eval_recurrence(schema_for(theorem_for(family), params),
                                static_cast<long long>(row.values.size()));
            for (size_t i = 0; i < row.values.size(); ++i) {
                const int n = static_cast<int>(i) + 1;
                const BigInt expected = row.values[i];
                const BigInt closed = count_closed(params, n);
                const BigInt enumerated = count_by_enumeration(params, n);
                const BigInt recurred = by_rec.at(n);
                ++cells;
                if (closed != expected || enumerated != expected || recurred != expected) {
                    detail = params.describe() + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    };
    const bool ok = check_table(Family::A, fixtures::table_A()) &&
                    check_table(Family::B, fixtures::table_B()) &&
                    check_table(Family::D, fixtures::table_D());
    report(1, "tables reproduced by closed form, recurrence, and enumeration (" +
                  std::to_string(cells) + " cells x 3 methods)",
           ok, detail);
}

// 2. Uncolored theorem: recurrence against closed form through n = 25, and
//    the initial-window formula against the full closed form.
void criterion_theorem_A() {
    std::string detail;
    bool ok = true;
    for (int s = 1; s <= 3 && ok; ++s) {
        for (int p = 1; p <= 3 && ok; ++p) {
            const FamilyParams params = FamilyParams::uncolored(s, p);
            const BigSequence by_rec = eval_recurrence(schema_for(TheoremId::A, params), 25);
            for (int n = s * p + 2; n <= 25 && ok; ++n) {
                if (by_rec.at(n) != count_A_closed(s, p, n)) {
                    ok = false;
                    detail = params.describe() + " n=" + std::to_string(n);
                }
            }
            for (int n = 1; n <= s * p + 1 && ok; ++n) {
                if (count_A_initial(s, p, n) != count_A_closed(s, p, n)) {
                    ok = false;
                    detail = "window " + params.describe() + " n=" + std::to_string(n);
                }
            }
        }
    }
    report(2, "uncolored recurrence holds to n=25; initial window matches the closed form", ok, detail);
}

// 3. Colored theorem: recurrence to n = 25, subsequence identity into
//    parent b, and the characteristic-polynomial divisibility.
void criterion_theorem_B() {
    std::string detail;
    bool ok = true;
    for (int s = 1; s <= 3 && ok; ++s) {
        for (int p = 1; p <= 3 && ok; ++p) {
            const FamilyParams params = FamilyParams::colored(s, p);
            const BigSequence by_rec = eval_recurrence(schema_for(TheoremId::B, params), 25);
            for (int n = s * p + 2; n <= 25 && ok; ++n) {
                if (by_rec.at(n) != count_B_closed(s, p, n)) {
                    ok = false;
                    detail = params.describe() + " n=" + std::to_string(n);
                }
            }
            for (int n = 1; n <= 20 && ok; ++n) {
                if (count_B_closed(s, p, n) !=
                    parent_b(s, p, static_cast<long long>(n) * s - s + 1, ParentMethod::closed)) {
                    ok = false;
                    detail = "subsequence " + params.describe() + " n=" + std::to_string(n);
                }
            }
        }
    }
    for (int s = 1; s <= 6 && ok; ++s) {
        for (int p = 1; p <= 6 && ok; ++p) {
            const auto divisor = build_char_poly(CharPolySpec::make_u(s, p));
            const auto target = poly_compose_power(build_char_poly(CharPolySpec::make_v(s, p)), s);
            if (!poly_divrem(target, divisor).remainder.is_zero()) {
                ok = false;
                detail = "divisibility s=" + std::to_string(s) + " p=" + std::to_string(p);
            }
        }
    }
    report(3, "colored recurrence holds to n=25; parent subsequence and divisibility hold", ok, detail);
}

// 4. Divisor-free theorem: Fibonacci head, alternating recurrence to
//    n = 30, parent subsequence identity, divisibility.
void criterion_theorem_D() {
    std::string detail;
    bool ok = true;
    for (int u = 2; u <= 6 && ok; ++u) {
        for (int n = 1; n <= 2 * u - 1 && ok; ++n) {
            if (count_D_closed(u, n) != mstep_fibonacci(2, n)) {
                ok = false;
                detail = "Fibonacci head u=" + std::to_string(u) + " n=" + std::to_string(n);
            }
        }
        const BigSequence by_rec =
            eval_recurrence(schema_for(TheoremId::D, FamilyParams::divisor_free(u)), 30);
        for (int n = 2 * u; n <= 30 && ok; ++n) {
            if (by_rec.at(n) != count_D_closed(u, n)) {
                ok = false;
                detail = "recurrence u=" + std::to_string(u) + " n=" + std::to_string(n);
            }
        }
        for (int n = 1; n <= 20 && ok; ++n) {
            if (count_D_closed(u, n) !=
                parent_d(u, static_cast<long long>(u) * n - (u - 1), ParentMethod::closed)) {
                ok = false;
                detail = "subsequence u=" + std::to_string(u) + " n=" + std::to_string(n);
            }
        }
    }
    for (int u = 2; u <= 8 && ok; ++u) {
        const auto divisor = build_char_poly(CharPolySpec::make_p(u));
        const auto target = poly_compose_power(build_char_poly(CharPolySpec::make_q(u)), u);
        if (!poly_divrem(target, divisor).remainder.is_zero()) {
            ok = false;
            detail = "divisibility u=" + std::to_string(u);
        }
    }
    report(4, "divisor-free Fibonacci head, recurrence to n=30, subsequence, divisibility", ok, detail);
}

// 5. Parent sequences: the two evaluation methods agree to n = 60 and the
//    six listed prefixes are reproduced verbatim.
void criterion_parents() {
    std::string detail;
    bool ok = true;
    for (int s = 1; s <= 3 && ok; ++s)
        for (int p = 1; p <= 3 && ok; ++p)
            for (long long n = 1; n <= 60 && ok; ++n)
                if (parent_b(s, p, n, ParentMethod::recursive) != parent_b(s, p, n, ParentMethod::closed)) {
                    ok = false;
                    detail = "b s=" + std::to_string(s) + " p=" + std::to_string(p) +
                             " n=" + std::to_string(n);
                }
    for (int u = 2; u <= 6 && ok; ++u)
        for (long long n = 1; n <= 60 && ok; ++n)
            if (parent_d(u, n, ParentMethod::recursive) != parent_d(u, n, ParentMethod::closed)) {
                ok = false;
                detail = "d u=" + std::to_string(u) + " n=" + std::to_string(n);
            }
    for (const auto& row : fixtures::parents_b()) {
        const auto seq = sequence_of(ParentB{row.s, row.p}, static_cast<int>(row.values.size()));
        for (size_t i = 0; i < row.values.size() && ok; ++i)
            if (seq.terms[i] != row.values[i]) {
                ok = false;
                detail = "prefix b s=" + std::to_string(row.s) + " p=" + std::to_string(row.p);
            }
    }
    for (const auto& row : fixtures::parents_d()) {
        const auto seq = sequence_of(ParentD{row.u}, static_cast<int>(row.values.size()));
        for (size_t i = 0; i < row.values.size() && ok; ++i)
            if (seq.terms[i] != row.values[i]) {
                ok = false;
                detail = "prefix d u=" + std::to_string(row.u);
            }
    }
    report(5, "parent sequences: both methods agree to n=60; listed prefixes verbatim", ok, detail);
}

// 6. The partition bijections: exhaustive round trip and image equality.
void criterion_bijections() {
    std::string detail;
    bool ok = true;
    for (int s = 1; s <= 3 && ok; ++s) {
        for (int p = 1; p <= 3 && ok; ++p) {
            const FamilyParams params = FamilyParams::uncolored(s, p);
            for (int n = s * p + 2; n <= 10 && ok; ++n) {
                const auto whole = enumerate_family(params, n);
                std::map<int, std::set<SubsetWitness>> classes;
                for (const auto& w : whole) {
                    int copies = 0;
                    for (const auto& [value, mult] : w.elements)
                        if (value == n - 1) copies = mult;
                    classes[copies].insert(w);
                }
                size_t covered = 0;
                for (int i = 0; i <= s && ok; ++i) {
                    const int source_n = n - 1 - i * p;
                    if (source_n < 1) {
                        if (!classes[i].empty()) {
                            ok = false;
                            detail = "unreachable class i=" + std::to_string(i);
                        }
                        continue;
                    }
                    std::set<SubsetWitness> image;
                    for (const auto& f : enumerate_family(params, source_n)) {
                        const SubsetWitness g = psi_apply(i, f, params, n);
                        if (psi_invert(i, g, params, n) != f) {
                            ok = false;
                            detail = "round trip " + params.describe() + " n=" + std::to_string(n) +
                                     " i=" + std::to_string(i);
                            break;
                        }
                        image.insert(g);
                    }
                    if (ok && image != classes[i]) {
                        ok = false;
                        detail = "image " + params.describe() + " n=" + std::to_string(n) +
                                 " i=" + std::to_string(i);
                    }
                    covered += image.size();
                }
                if (ok && covered != whole.size()) {
                    ok = false;
                    detail = "partition " + params.describe() + " n=" + std::to_string(n);
                }
            }
        }
    }
    report(6, "partition bijections: round trip and image equality, exhaustive", ok, detail);
}

// 7. The five conjectured recurrences are rediscovered exactly, and nothing
//    of lower order fits.
void criterion_discovery() {
    std::string detail;
    bool ok = true;
    const auto started = std::chrono::steady_clock::now();
    for (const auto& row : fixtures::conjectures_H()) {
        const int order = static_cast<int>(row.coeffs.size());
        const int terms = std::max(16, 2 * order + 4);  // 16..18 terms
        const auto seq = sequence_of(FamilyParams::general(row.s, row.p, row.q), terms);
        const auto schema = discover_recurrence(seq, order);
        if (!schema || schema->coeffs.size() != row.coeffs.size()) {
            ok = false;
            detail = "not found for q=" + std::to_string(row.q) + " p=" + std::to_string(row.p);
            break;
        }
        for (size_t i = 0; i < row.coeffs.size(); ++i) {
            if (schema->coeffs[i] != row.coeffs[i] || schema->offsets[i] != static_cast<int>(i) + 1) {
                ok = false;
                detail = "coefficients differ for q=" + std::to_string(row.q);
            }
        }
        const auto below = discover_recurrence(
            sequence_of(FamilyParams::general(row.s, row.p, row.q), std::max(16, 2 * (order - 1) + 4)),
            order - 1);
        if (below) {
            ok = false;
            detail = "minimality violated for q=" + std::to_string(row.q);
        }
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    if (elapsed > std::chrono::seconds(10)) {
        ok = false;
        detail = "took " + std::to_string(elapsed.count()) + " ms";
    }
    report(7, "all five conjectured recurrences rediscovered exactly, minimally, in time", ok, detail);
}

// 8. Both-sides identity sweeps.
void criterion_identities() {
    std::string detail;
    bool ok = true;
    const auto run = [&](IdentityId id, SweepRanges ranges, const char* label) {
        if (!ok) return;
        const auto r = sweep(id, ranges);
        if (!r.pass) {
            ok = false;
            detail = label;
        }
    };
    SweepRanges tail;
    tail.u = IntRange{2, 5};
    tail.n = IntRange{1, 30};
    run(IdentityId::EE4, tail, "EE4");
    run(IdentityId::EE5, tail, "EE5");
    SweepRanges head;
    head.u = IntRange{2, 8};
    head.n = IntRange{1, 1000};  // clipped to 2u-1 per u
    run(IdentityId::EE10, head, "EE10");
    run(IdentityId::E11, head, "E11");
    SweepRanges oot;
    oot.n = IntRange{1, 30};
    run(IdentityId::OOT, oot, "OOT");
    report(8, "appendix identity sweeps (EE4, EE5, EE10, E11, OOT): zero failures", ok, detail);
}

// 9. The p=1 uncolored counts are exactly the (s+1)-step Fibonacci numbers.
void criterion_mstep() {
    std::string detail;
    bool ok = true;
    for (int s = 1; s <= 4 && ok; ++s)
        for (int n = 1; n <= 25 && ok; ++n)
            if (count_A_closed(s, 1, n) != mstep_fibonacci(s + 1, n)) {
                ok = false;
                detail = "s=" + std::to_string(s) + " n=" + std::to_string(n);
            }
    report(9, "p=1 counts equal the (s+1)-step Fibonacci numbers to n=25", ok, detail);
}

// 10. OEIS alignments from committed fixtures, and byte-stable golden json.
void criterion_oeis() {
    std::string detail;
    bool ok = true;

    OeisClientOptions opts;
    opts.base_url = "http://127.0.0.1:9";  // never reachable; cache only
    opts.cache_dir = kFixtures / "oeis";
    OeisClient client(opts);

    struct Case {
        const char* id;
        SequenceDescriptor what;
        int n_max;
    };
    const std::vector<Case> cases = {
        {"A000045", FamilyParams::uncolored(1, 1), 16},
        {"A078012", FamilyParams::uncolored(1, 2), 16},
        {"A000073", FamilyParams::uncolored(2, 1), 16},
        {"A060961", FamilyParams::uncolored(2, 2), 16},
        {"A000078", FamilyParams::uncolored(3, 1), 16},
        {"A117760", FamilyParams::uncolored(3, 2), 16},
        {"A000045", FamilyParams::colored(1, 1), 16},
        {"A078012", FamilyParams::colored(1, 2), 16},
        {"A002478", FamilyParams::colored(2, 1), 16},
        {"A193147", FamilyParams::colored(2, 2), 16},
        {"A099234", FamilyParams::colored(3, 1), 16},
        {"A373718", FamilyParams::colored(3, 2), 16},
        {"A005251", FamilyParams::divisor_free(2), 16},
        {"A137402", FamilyParams::divisor_free(3), 16},
        {"A000930", ParentB{2, 1}, 20},
        {"A003520", ParentB{2, 2}, 20},
        {"A005709", ParentB{3, 2}, 20},
    };
    for (const auto& c : cases) {
        const auto reference = client.fetch_bfile(OeisId(c.id));
        const auto computed = sequence_of(c.what, c.n_max);
        const auto alignment = align(computed, reference, 12);
        if (!alignment.match) {
            ok = false;
            detail = std::string(c.id) + " vs " + computed.provenance + " (matched " +
                     std::to_string(alignment.matched) + ")";
            break;
        }
    }

    if (ok) {
        const auto golden_matches = [&](const std::string& args, const std::string& file) {
            const std::string cmd = std::string(SCHREIER_CLI_PATH) + " " + args + " 2>/dev/null";
            FILE* pipe = popen(cmd.c_str(), "r");
            if (!pipe) return false;
            std::string out;
            std::array<char, 4096> buffer;
            size_t got = 0;
            while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
            const int status = pclose(pipe);
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return false;
            return out == slurp(kFixtures / "golden" / file);
        };
        if (!golden_matches("count --family A --s 2 --p 1 --n 1..12 --method all --format json",
                            "count_A_s2_p1_all.json") ||
            !golden_matches("count --family D --u 3 --n 1..12 --method all --format json",
                            "count_D_u3_all.json")) {
            ok = false;
            detail = "golden json drifted";
        }
    }
    report(10, "OEIS ids align at >=12 terms from fixtures; golden json byte-stable", ok, detail);
}

}  // namespace

int main() {
    const auto started = std::chrono::steady_clock::now();
    criterion_tables();
    criterion_theorem_A();
    criterion_theorem_B();
    criterion_theorem_D();
    criterion_parents();
    criterion_bijections();
    criterion_discovery();
    criterion_identities();
    criterion_mstep();
    criterion_oeis();
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : std::to_string(g_failures) + " CRITERIA FAILED")
              << " (" << elapsed.count() << " ms)\n";
    return g_failures == 0 ? 0 : 1;
}
