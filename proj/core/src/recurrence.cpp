#include "schreier/recurrence.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "schreier/closed_forms.hpp"
#include "schreier/combinatorics.hpp"

namespace schreier {

const char* theorem_name(TheoremId t) {
    switch (t) {
        case TheoremId::A: return "A";
        case TheoremId::B: return "B";
        case TheoremId::D: return "D";
    }
    return "?";
}

void RecurrenceSchema::validate() const {
    if (offsets.empty() || offsets.size() != coeffs.size())
        throw std::invalid_argument("RecurrenceSchema: offsets and coeffs must be nonempty and parallel");
    for (size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] < 1 || (i > 0 && offsets[i] <= offsets[i - 1]))
            throw std::invalid_argument("RecurrenceSchema: offsets must be strictly increasing positive");
    }
    if (seeds.terms.empty()) throw std::invalid_argument("RecurrenceSchema: seeds required");
    if (seeds.end_index() < valid_from - 1)
        throw std::invalid_argument("RecurrenceSchema: seeds must cover every index below valid_from");
    if (valid_from - max_offset() < seeds.start_index)
        throw std::invalid_argument("RecurrenceSchema: first computed index looks back before the seeds");
}

IntPolynomial RecurrenceSchema::characteristic_polynomial() const {
    std::vector<BigInt> c(static_cast<size_t>(max_offset()) + 1, BigInt(0));
    c[0] = 1;
    for (size_t j = 0; j < offsets.size(); ++j) {
        c[static_cast<size_t>(offsets[j])] -= coeffs[j];
    }
    return IntPolynomial(std::move(c));
}

RecurrenceSchema schema_for(TheoremId theorem, const FamilyParams& params) {
    params.validate();
    std::map<int, BigInt> taps;  // offset -> coefficient, merged on collision
    RecurrenceSchema schema;

    switch (theorem) {
        case TheoremId::A: {
            if (params.family != Family::A)
                throw std::invalid_argument("schema_for: theorem A applies to family A");
            for (int i = 0; i <= params.s; ++i) taps[1 + i * params.p] += 1;
            schema.valid_from = static_cast<long long>(params.s) * params.p + 2;
            for (int n = 1; n < schema.valid_from; ++n)
                schema.seeds.terms.push_back(count_A_closed(params.s, params.p, n));
            break;
        }
        case TheoremId::B: {
            if (params.family != Family::B)
                throw std::invalid_argument("schema_for: theorem B applies to family B");
            for (int i = 0; i <= params.s; ++i) taps[1 + i * params.p] += binom(params.s, i);
            schema.valid_from = static_cast<long long>(params.s) * params.p + 2;
            for (int n = 1; n < schema.valid_from; ++n)
                schema.seeds.terms.push_back(count_B_closed(params.s, params.p, n));
            break;
        }
        case TheoremId::D: {
            if (params.family != Family::D)
                throw std::invalid_argument("schema_for: theorem D applies to family D");
            const int u = params.u;
            for (int i = 1; i <= u; ++i) {
                BigInt c = binom(u, i);
                taps[i] += (i % 2 == 1) ? c : -c;
            }
            taps[2 * u - 1] += 1;
            schema.valid_from = 2LL * u;
            for (int n = 1; n < schema.valid_from; ++n)
                schema.seeds.terms.push_back(mstep_fibonacci(2, n));
            break;
        }
    }

    for (const auto& [offset, coeff] : taps) {
        schema.offsets.push_back(offset);
        schema.coeffs.push_back(coeff);
    }
    schema.seeds.start_index = 1;
    schema.seeds.provenance = std::string("seeds for theorem ") + theorem_name(theorem) + " " + params.describe();
    schema.validate();
    return schema;
}

BigSequence eval_recurrence(const RecurrenceSchema& schema, long long n_max) {
    schema.validate();
    if (n_max < schema.seeds.start_index)
        throw std::invalid_argument("eval_recurrence: n_max precedes the seed range");

    BigSequence out;
    out.start_index = schema.seeds.start_index;
    out.provenance = schema.seeds.provenance;
    const long long seed_top = std::min(n_max, schema.valid_from - 1);
    for (long long n = out.start_index; n <= seed_top; ++n) out.terms.push_back(schema.seeds.at(n));
    for (long long n = schema.valid_from; n <= n_max; ++n) {
        BigInt acc = 0;
        for (size_t j = 0; j < schema.offsets.size(); ++j) {
            acc += schema.coeffs[j] * out.terms[static_cast<size_t>(n - schema.offsets[j] - out.start_index)];
        }
        out.terms.push_back(std::move(acc));
    }
    return out;
}

TheoremReport verify_theorem(TheoremId theorem, const FamilyParams& params, long long n_max,
                             const VerifyOptions& options) {
    RecurrenceSchema schema = schema_for(theorem, params);
    if (n_max < schema.valid_from)
        throw std::invalid_argument("verify_theorem: n_max must reach the recurrence's first index");

    TheoremReport report{theorem, params, n_max, true, {}};
    BigSequence by_rec = eval_recurrence(schema, n_max);

    bool enumeration_alive = options.include_enumeration;
    for (long long n = 1; n <= n_max; ++n) {
        TheoremCell cell;
        cell.n = n;
        cell.by_recurrence = by_rec.at(n);
        cell.by_closed_form = count_closed(params, static_cast<int>(n));
        if (enumeration_alive) {
            // Skip ahead of time when the closed count already implies more
            // DFS nodes than the budget allows; enumeration visits at least
            // one node per witness.
            if (cell.by_closed_form > options.node_budget) {
                enumeration_alive = false;
            } else {
                try {
                    cell.by_enumeration = count_by_enumeration(params, static_cast<int>(n), options.node_budget);
                } catch (const OracleScaleExceeded&) {
                    enumeration_alive = false;  // monotone in n; stop trying
                }
            }
        }
        cell.agree = cell.by_recurrence == cell.by_closed_form &&
                     (!cell.by_enumeration || *cell.by_enumeration == cell.by_closed_form);
        report.pass = report.pass && cell.agree;
        report.cells.push_back(std::move(cell));
    }
    return report;
}

namespace {

// Exact Gauss-Jordan over rationals. Returns false when inconsistent;
// otherwise writes one solution (free variables zero).
bool solve_exact(std::vector<std::vector<BigRational>>& aug, int ncols,
                 std::vector<BigRational>& solution) {
    const int nrows = static_cast<int>(aug.size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pr = -1;
        for (int r = row; r < nrows; ++r) {
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        std::swap(aug[static_cast<size_t>(row)], aug[static_cast<size_t>(pr)]);
        const BigRational inv = aug[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& x : aug[static_cast<size_t>(row)]) x /= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            const BigRational factor = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c = 0; c <= ncols; ++c) {
                aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * aug[static_cast<size_t>(row)][static_cast<size_t>(c)];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < nrows; ++r) {
        if (aug[static_cast<size_t>(r)][static_cast<size_t>(ncols)] != 0) return false;
    }
    solution.assign(static_cast<size_t>(ncols), BigRational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) {
        solution[static_cast<size_t>(pivot_col[i])] = aug[i][static_cast<size_t>(ncols)];
    }
    return true;
}

}  // namespace

std::optional<RecurrenceSchema> discover_recurrence(const BigSequence& seq, int max_order, int margin) {
    if (max_order < 1) throw std::invalid_argument("discover_recurrence: max_order must be at least 1");
    if (margin < 0) throw std::invalid_argument("discover_recurrence: margin must be nonnegative");
    const long long len = static_cast<long long>(seq.terms.size());
    if (len < 2LL * max_order + margin)
        throw std::invalid_argument("discover_recurrence: prefix too short (need at least 2*max_order + margin terms)");

    for (int order = 1; order <= max_order; ++order) {
        // One row per predictable position: [a_{t-1} ... a_{t-order} | a_t].
        std::vector<std::vector<BigRational>> aug;
        for (long long t = order; t < len; ++t) {
            std::vector<BigRational> row;
            row.reserve(static_cast<size_t>(order) + 1);
            for (int i = 1; i <= order; ++i) row.emplace_back(seq.terms[static_cast<size_t>(t - i)]);
            row.emplace_back(seq.terms[static_cast<size_t>(t)]);
            aug.push_back(std::move(row));
        }
        std::vector<BigRational> solution;
        if (!solve_exact(aug, order, solution)) continue;

        // The monic BigInt schema can only carry integral coefficients; a
        // fractional solution at this order cannot be expressed, so keep
        // searching.
        std::vector<BigInt> coeffs;
        coeffs.reserve(solution.size());
        bool integral = true;
        for (const BigRational& c : solution) {
            if (boost::multiprecision::denominator(c) != 1) { integral = false; break; }
            coeffs.emplace_back(boost::multiprecision::numerator(c));
        }
        if (!integral) continue;

        RecurrenceSchema schema;
        for (int i = 1; i <= order; ++i) schema.offsets.push_back(i);
        schema.coeffs = std::move(coeffs);
        schema.seeds.start_index = seq.start_index;
        schema.seeds.provenance = "discovered from " + seq.provenance;
        schema.seeds.terms.assign(seq.terms.begin(), seq.terms.begin() + order);
        schema.valid_from = seq.start_index + order;

        // Soundness: regenerating from the prefix's own seeds must
        // reproduce the entire input, fitting window and margin included.
        BigSequence regenerated = eval_recurrence(schema, seq.end_index());
        if (regenerated.terms == seq.terms) return schema;
    }
    return std::nullopt;
}

std::string format_recurrence(const RecurrenceSchema& schema) {
    std::ostringstream out;
    out << "a_n = ";
    bool first = true;
    for (size_t j = 0; j < schema.offsets.size(); ++j) {
        const BigInt& c = schema.coeffs[j];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag.str();
        out << "a_{n-" << schema.offsets[j] << "}";
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace schreier
