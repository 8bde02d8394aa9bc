// Command-line front end: compute family counting sequences, verify the
// recurrence theorems and identities, discover minimal recurrences, and
// cross-check sequences against OEIS b-files.
//
// Exit codes (stable contract):
//   0  success / PASS / MATCH
//   1  method disagreement, identity failure, NO-MATCH, or nothing found
//   2  bad flags, inconsistent family parameters, or out-of-domain ranges
//   3  enumeration refused (oracle scale exceeded)
//   4  network/fetch failure

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schreier/closed_forms.hpp"
#include "schreier/combinatorics.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/identities.hpp"
#include "schreier/oeis.hpp"
#include "schreier/recurrence.hpp"

namespace {

using schreier::BigInt;
using schreier::Family;
using schreier::FamilyParams;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;
constexpr int kExitNetwork = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    long long lo = 0, hi = 0;
};

// "a..b" inclusive; a single integer is a singleton range.
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(text);
            return {v, v};
        }
        Range r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
        if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
        return r;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("cannot parse range '" + text + "' (expected N or A..B)");
    }
}

enum class Format { table, json_fmt, csv };

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json_fmt;
    if (name == "csv") return Format::csv;
    throw UsageError("unknown format '" + name + "'");
}

// Family flags shared by count/discover/oeis.
struct FamilyFlags {
    std::string family;
    int s = 1, p = 1, q = 1, u = 2;
    bool s_set = false, p_set = false, q_set = false, u_set = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family, "Family: A, B, D, or H")->required();
        cmd->add_option("--s", s, "Copies per value (A, B, H)")->check(CLI::PositiveNumber);
        cmd->add_option("--p", p, "Condition numerator (A, B, H)")->check(CLI::PositiveNumber);
        cmd->add_option("--q", q, "Condition denominator (H)")->check(CLI::PositiveNumber);
        cmd->add_option("--u", u, "Forbidden divisor (D)");
    }
    void record(const CLI::App* cmd) {
        s_set = cmd->count("--s") > 0;
        p_set = cmd->count("--p") > 0;
        q_set = cmd->count("--q") > 0;
        u_set = cmd->count("--u") > 0;
    }

    FamilyParams resolve() const {
        FamilyParams params;
        if (family == "A") params = FamilyParams::uncolored(s, p);
        else if (family == "B") params = FamilyParams::colored(s, p);
        else if (family == "D") params = FamilyParams::divisor_free(u);
        else if (family == "H") params = FamilyParams::general(s, p, q);
        else throw UsageError("unknown family '" + family + "'");

        if (params.family == Family::D) {
            if (s_set || p_set || q_set) throw UsageError("family D takes only --u");
            if (!u_set) throw UsageError("family D requires --u");
        } else {
            if (u_set) throw UsageError("--u applies to family D only");
            if (params.family != Family::H && q_set && q != 1)
                throw UsageError("--q is fixed to 1 for families A and B");
        }
        try {
            params.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return params;
    }
};

json params_json(const FamilyParams& params) {
    json j;
    j["family"] = schreier::family_name(params.family);
    switch (params.family) {
        case Family::A:
        case Family::B:
            j["s"] = params.s;
            j["p"] = params.p;
            break;
        case Family::D:
            j["u"] = params.u;
            break;
        case Family::H:
            j["s"] = params.s;
            j["p"] = params.p;
            j["q"] = params.q;
            break;
    }
    return j;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    for (size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
    }
}

void emit_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    const auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            std::cout << (i ? "  " : "");
            std::cout << cells[i] << std::string(width[i] - cells[i].size(), ' ');
        }
        std::cout << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
}

// ---------------------------------------------------------------- count --

struct CountArgs {
    FamilyFlags family;
    std::string n_text;
    std::string method = "closed";
    std::string format = "table";
    long long budget = schreier::kDefaultNodeBudget;
};

int run_count(const CountArgs& args) {
    const FamilyParams params = args.family.resolve();
    const Range n_range = parse_range(args.n_text);
    if (n_range.lo < 1) throw UsageError("--n must start at 1 or later");
    const Format format = parse_format(args.format);

    const bool want_enum = args.method == "enum" || args.method == "all";
    const bool want_closed = args.method == "closed" || args.method == "all";
    const bool want_rec = args.method == "recurrence" || args.method == "all";
    if (!want_enum && !want_closed && !want_rec)
        throw UsageError("unknown method '" + args.method + "'");

    std::optional<schreier::BigSequence> by_recurrence;
    if (want_rec) {
        if (params.family == Family::H)
            throw UsageError("family H has no proven recurrence; use --method closed or enum");
        const auto theorem = params.family == Family::A   ? schreier::TheoremId::A
                             : params.family == Family::B ? schreier::TheoremId::B
                                                          : schreier::TheoremId::D;
        by_recurrence = eval_recurrence(schema_for(theorem, params), n_range.hi);
    }

    std::vector<std::string> header{"n"};
    if (want_enum) header.push_back("enum");
    if (want_closed) header.push_back("closed");
    if (want_rec) header.push_back("recurrence");
    if (args.method == "all") header.push_back("agree");

    json rows = json::array();
    std::vector<std::vector<std::string>> cells;
    bool all_agree = true;
    bool enumeration_alive = want_enum;

    for (long long n = n_range.lo; n <= n_range.hi; ++n) {
        json row;
        row["n"] = n;
        std::vector<std::string> cell{std::to_string(n)};
        std::optional<BigInt> v_enum, v_closed, v_rec;

        if (enumeration_alive) {
            try {
                v_enum = schreier::count_by_enumeration(params, static_cast<int>(n), args.budget);
            } catch (const schreier::OracleScaleExceeded&) {
                if (args.method == "enum") throw;  // sole method: refuse (exit 3)
                enumeration_alive = false;          // side-by-side: drop the column from here on
            }
        }
        if (want_closed) v_closed = schreier::count_closed(params, static_cast<int>(n));
        if (want_rec) v_rec = by_recurrence->at(n);

        if (want_enum) {
            row["enum"] = v_enum ? json(v_enum->str()) : json(nullptr);
            cell.push_back(v_enum ? v_enum->str() : "-");
        }
        if (want_closed) {
            row["closed"] = v_closed->str();
            cell.push_back(v_closed->str());
        }
        if (want_rec) {
            row["recurrence"] = v_rec->str();
            cell.push_back(v_rec->str());
        }
        if (args.method == "all") {
            const BigInt& ref = *v_closed;
            const bool agree = (!v_enum || *v_enum == ref) && (!v_rec || *v_rec == ref);
            all_agree = all_agree && agree;
            row["agree"] = agree;
            cell.push_back(agree ? "yes" : "NO");
        }
        rows.push_back(std::move(row));
        cells.push_back(std::move(cell));
    }

    const std::string status = args.method == "all" ? (all_agree ? "OK" : "DISAGREE") : "OK";
    if (format == Format::json_fmt) {
        json doc;
        doc["command"] = "count";
        doc["params"] = params_json(params);
        doc["params"]["n"] = args.n_text;
        doc["params"]["method"] = args.method;
        doc["rows"] = std::move(rows);
        doc["status"] = status;
        emit_json(doc);
    } else if (format == Format::csv) {
        emit_csv(header, cells);
    } else {
        emit_table(header, cells);
        if (args.method == "all") std::cout << "status: " << status << "\n";
    }
    return status == "OK" ? kExitOk : kExitFail;
}

// --------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string theorem;
    std::string identity;
    std::string s_text, p_text, u_text, n_text;
    long long n_max = 0;
    bool n_max_set = false;
    std::string format = "table";
    long long budget = schreier::kDefaultNodeBudget;
    bool no_enum = false;
};

int run_verify_theorem(const VerifyArgs& args) {
    const auto single = [](const std::string& text, const char* flag) -> int {
        if (text.empty()) throw UsageError(std::string("verify --theorem requires ") + flag);
        const Range r = parse_range(text);
        if (r.lo != r.hi) throw UsageError(std::string(flag) + " must be a single value for theorems");
        return static_cast<int>(r.lo);
    };

    FamilyParams params;
    schreier::TheoremId theorem;
    if (args.theorem == "A") {
        theorem = schreier::TheoremId::A;
        params = FamilyParams::uncolored(single(args.s_text, "--s"), single(args.p_text, "--p"));
    } else if (args.theorem == "B") {
        theorem = schreier::TheoremId::B;
        params = FamilyParams::colored(single(args.s_text, "--s"), single(args.p_text, "--p"));
    } else if (args.theorem == "D") {
        theorem = schreier::TheoremId::D;
        params = FamilyParams::divisor_free(single(args.u_text, "--u"));
    } else {
        throw UsageError("unknown theorem '" + args.theorem + "' (expected A, B, or D)");
    }
    if (!args.n_max_set) throw UsageError("verify --theorem requires --n-max");

    schreier::VerifyOptions options;
    options.node_budget = args.budget;
    options.include_enumeration = !args.no_enum;
    schreier::TheoremReport report;
    try {
        report = verify_theorem(theorem, params, args.n_max, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const Format format = parse_format(args.format);
    if (format == Format::json_fmt) {
        json doc;
        doc["command"] = "verify";
        doc["params"] = params_json(params);
        doc["params"]["theorem"] = args.theorem;
        doc["params"]["n_max"] = args.n_max;
        json rows = json::array();
        for (const auto& cell : report.cells) {
            json row;
            row["n"] = cell.n;
            row["recurrence"] = cell.by_recurrence.str();
            row["closed"] = cell.by_closed_form.str();
            row["enum"] = cell.by_enumeration ? json(cell.by_enumeration->str()) : json(nullptr);
            row["agree"] = cell.agree;
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        doc["status"] = report.pass ? "PASS" : "FAIL";
        emit_json(doc);
    } else {
        std::vector<std::string> header{"n", "recurrence", "closed", "enum", "agree"};
        std::vector<std::vector<std::string>> cells;
        for (const auto& cell : report.cells) {
            cells.push_back({std::to_string(cell.n), cell.by_recurrence.str(), cell.by_closed_form.str(),
                             cell.by_enumeration ? cell.by_enumeration->str() : "-",
                             cell.agree ? "yes" : "NO"});
        }
        if (format == Format::csv) emit_csv(header, cells);
        else {
            emit_table(header, cells);
            std::cout << "theorem " << args.theorem << " " << params.describe() << ": "
                      << (report.pass ? "PASS" : "FAIL") << "\n";
        }
    }
    return report.pass ? kExitOk : kExitFail;
}

int run_verify_identity(const VerifyArgs& args) {
    const auto id = schreier::identity_from_name(args.identity);
    if (!id) throw UsageError("unknown identity '" + args.identity + "'");

    schreier::SweepRanges ranges;
    const auto set = [](const std::string& text) -> std::optional<schreier::IntRange> {
        if (text.empty()) return std::nullopt;
        const Range r = parse_range(text);
        return schreier::IntRange{r.lo, r.hi};
    };
    ranges.u = set(args.u_text);
    ranges.s = set(args.s_text);
    ranges.p = set(args.p_text);

    const bool explicit_n = !args.n_text.empty();
    if (explicit_n) {
        const Range r = parse_range(args.n_text);
        ranges.n = schreier::IntRange{r.lo, r.hi};
    } else if (args.n_max_set) {
        ranges.n = schreier::IntRange{1, args.n_max};
    }

    // An explicit --n range must sit inside the identity's domain for every
    // requested u; a partially out-of-domain request is a usage error, not
    // a silent clip.
    if (explicit_n && ranges.u && ranges.n) {
        using schreier::IdentityId;
        if (*id == IdentityId::EE10 || *id == IdentityId::E11 || *id == IdentityId::FIRST_D_FIB) {
            if (ranges.n->hi > 2 * ranges.u->lo - 1)
                throw UsageError("domain: " + args.identity + " requires n <= 2u-1");
        }
        if (*id == IdentityId::EE4 || *id == IdentityId::EE5) {
            if (ranges.n->lo < 2 * ranges.u->hi)
                throw UsageError("domain: " + args.identity + " requires n >= 2u");
        }
    }

    schreier::SweepReport report;
    try {
        report = schreier::sweep(*id, ranges);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const Format format = parse_format(args.format);
    if (format == Format::json_fmt) {
        json doc;
        doc["command"] = "verify";
        doc["params"] = json::object();
        doc["params"]["identity"] = args.identity;
        if (!args.u_text.empty()) doc["params"]["u"] = args.u_text;
        if (!args.s_text.empty()) doc["params"]["s"] = args.s_text;
        if (!args.p_text.empty()) doc["params"]["p"] = args.p_text;
        if (explicit_n) doc["params"]["n"] = args.n_text;
        else if (args.n_max_set) doc["params"]["n_max"] = args.n_max;
        doc["checked"] = report.checked;
        json rows = json::array();
        for (const auto& failure : report.failures) {
            json row;
            row["u"] = failure.params.u;
            row["s"] = failure.params.s;
            row["p"] = failure.params.p;
            row["n"] = failure.params.n;
            row["lhs"] = failure.check.lhs_str();
            row["rhs"] = failure.check.rhs_str();
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        doc["status"] = report.pass ? "PASS" : "FAIL";
        emit_json(doc);
    } else {
        std::cout << "identity " << args.identity << ": checked " << report.checked << " cells, "
                  << report.failures.size() << " failures -> " << (report.pass ? "PASS" : "FAIL")
                  << "\n";
        for (const auto& failure : report.failures) {
            std::cout << "  FAIL at u=" << failure.params.u << " s=" << failure.params.s
                      << " p=" << failure.params.p << " n=" << failure.params.n << ": lhs "
                      << failure.check.lhs_str() << " != rhs " << failure.check.rhs_str() << "\n";
        }
    }
    return report.pass ? kExitOk : kExitFail;
}

// ------------------------------------------------------------- discover --

struct DiscoverArgs {
    FamilyFlags family;
    int terms = 0;
    int max_order = 0;
    int margin = 4;
    std::string format = "table";
};

int run_discover(const DiscoverArgs& args) {
    const FamilyParams params = args.family.resolve();
    if (args.max_order < 1) throw UsageError("--max-order must be at least 1");
    if (args.terms < 2 * args.max_order + args.margin)
        throw UsageError("--terms must be at least 2*max-order + " + std::to_string(args.margin));

    const schreier::BigSequence seq = schreier::sequence_of(params, args.terms);
    std::optional<schreier::RecurrenceSchema> schema;
    try {
        schema = schreier::discover_recurrence(seq, args.max_order, args.margin);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const Format format = parse_format(args.format);
    const int order = schema ? schema->max_offset() : 0;
    const long long confirmed = schema ? static_cast<long long>(seq.terms.size()) - 2LL * order : 0;

    if (format == Format::json_fmt) {
        json doc;
        doc["command"] = "discover";
        doc["params"] = params_json(params);
        doc["params"]["terms"] = args.terms;
        doc["params"]["max_order"] = args.max_order;
        json rows = json::array();
        if (schema) {
            for (size_t j = 0; j < schema->offsets.size(); ++j) {
                if (schema->coeffs[j] == 0) continue;  // zero taps dropped for display
                json row;
                row["offset"] = schema->offsets[j];
                row["coeff"] = schema->coeffs[j].str();
                rows.push_back(std::move(row));
            }
        }
        doc["rows"] = std::move(rows);
        if (schema) {
            doc["order"] = order;
            doc["recurrence"] = schreier::format_recurrence(*schema);
            doc["confirmed"] = confirmed;
        }
        doc["status"] = schema ? "FOUND" : "NONE";
        emit_json(doc);
    } else if (schema) {
        std::cout << schreier::format_recurrence(*schema) << "\n";
        std::cout << "order " << order << ", confirmed on " << confirmed
                  << " terms beyond the fitting window\n";
    } else {
        std::cout << "none found (no recurrence of order <= " << args.max_order << " fits "
                  << seq.provenance << ")\n";
    }
    return schema ? kExitOk : kExitFail;
}

// ----------------------------------------------------------------- oeis --

struct OeisArgs {
    std::string id_text;
    FamilyFlags family;
    int n_max = 12;
    bool offline = false;
    bool refresh = false;
    long long min_match = 8;
    std::string format = "table";
};

int run_oeis(const OeisArgs& args) {
    const FamilyParams params = args.family.resolve();
    std::optional<schreier::OeisId> id;
    try {
        id.emplace(args.id_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (args.offline && args.refresh) throw UsageError("--offline and --refresh are mutually exclusive");
    if (args.n_max < 1) throw UsageError("--n-max must be at least 1");

    schreier::OeisClientOptions options = schreier::OeisClientOptions::from_env();
    options.offline = args.offline;
    schreier::OeisClient client(options);
    const schreier::BFile bfile =
        client.fetch_bfile(*id, args.refresh ? schreier::FetchPolicy::refresh
                                             : schreier::FetchPolicy::cache_first);

    const schreier::BigSequence computed = schreier::sequence_of(params, args.n_max);
    const schreier::AlignmentReport report = schreier::align(computed, bfile, args.min_match);

    const Format format = parse_format(args.format);
    if (format == Format::json_fmt) {
        json doc;
        doc["command"] = "oeis";
        doc["params"] = params_json(params);
        doc["params"]["id"] = id->str();
        doc["params"]["n_max"] = args.n_max;
        json row;
        row["shift"] = report.shift;
        row["matched"] = report.matched;
        if (report.first_mismatch) {
            row["first_mismatch_computed"] = report.first_mismatch->first;
            row["first_mismatch_reference"] = report.first_mismatch->second;
        }
        doc["rows"] = json::array({row});
        doc["status"] = report.status();
        emit_json(doc);
    } else {
        std::cout << id->str() << " vs " << computed.provenance << ": " << report.status()
                  << " (shift " << report.shift << ", matched " << report.matched << " terms)\n";
        if (report.first_mismatch) {
            std::cout << "first mismatch: computed index " << report.first_mismatch->first << " ("
                      << computed.at(report.first_mismatch->first).str() << ") vs reference index "
                      << report.first_mismatch->second << "\n";
        }
    }
    return report.match ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schreier-type multiset counting: closed forms, recurrences, and OEIS cross-checks"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Compute counting sequences by one or all methods");
    count_args.family.add_to(count);
    count->add_option("--n", count_args.n_text, "Index range, N or A..B")->required();
    count->add_option("--method", count_args.method, "enum, closed, recurrence, or all");
    count->add_option("--format", count_args.format, "table, json, or csv");
    count->add_option("--budget", count_args.budget, "Enumeration node budget");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Verify a recurrence theorem or a named identity");
    verify->add_option("--theorem", verify_args.theorem, "A, B, or D");
    verify->add_option("--identity", verify_args.identity,
                       "EE4, EE5, EE10, E11, OOT, SUBSEQ_B, SUBSEQ_D, DIV_UV, DIV_PQ, MSTEP_A, FIRST_D_FIB");
    verify->add_option("--s", verify_args.s_text, "s value or range");
    verify->add_option("--p", verify_args.p_text, "p value or range");
    verify->add_option("--u", verify_args.u_text, "u value or range");
    verify->add_option("--n", verify_args.n_text, "explicit n range (identities)");
    verify->add_option("--n-max", verify_args.n_max, "check up to this index");
    verify->add_option("--format", verify_args.format, "table, json, or csv");
    verify->add_option("--budget", verify_args.budget, "Enumeration node budget");
    verify->add_flag("--no-enum", verify_args.no_enum, "Skip the enumeration cross-check");

    DiscoverArgs discover_args;
    auto* discover = app.add_subcommand("discover", "Fit the minimal linear recurrence to a family sequence");
    discover_args.family.add_to(discover);
    discover->add_option("--terms", discover_args.terms, "How many closed-form terms to fit")->required();
    discover->add_option("--max-order", discover_args.max_order, "Largest order to try")->required();
    discover->add_option("--margin", discover_args.margin, "Required confirmed trailing terms");
    discover->add_option("--format", discover_args.format, "table or json");

    OeisArgs oeis_args;
    auto* oeis = app.add_subcommand("oeis", "Align a computed sequence against an OEIS b-file");
    oeis->add_option("--id", oeis_args.id_text, "OEIS id, e.g. A000045")->required();
    oeis_args.family.add_to(oeis);
    oeis->add_option("--n-max", oeis_args.n_max, "How many terms to compute");
    oeis->add_flag("--offline", oeis_args.offline, "Never touch the network (cache only)");
    oeis->add_flag("--refresh", oeis_args.refresh, "Re-download even when cached");
    oeis->add_option("--min-match", oeis_args.min_match, "Minimum matched terms for MATCH");
    oeis->add_option("--format", oeis_args.format, "table or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            count_args.family.record(count);
            return run_count(count_args);
        }
        if (verify->parsed()) {
            verify_args.n_max_set = verify->count("--n-max") > 0;
            const bool has_theorem = !verify_args.theorem.empty();
            const bool has_identity = !verify_args.identity.empty();
            if (has_theorem == has_identity)
                throw UsageError("verify needs exactly one of --theorem or --identity");
            return has_theorem ? run_verify_theorem(verify_args) : run_verify_identity(verify_args);
        }
        if (discover->parsed()) {
            discover_args.family.record(discover);
            return run_discover(discover_args);
        }
        if (oeis->parsed()) {
            oeis_args.family.record(oeis);
            return run_oeis(oeis_args);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const schreier::OracleScaleExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScale;
    } catch (const schreier::OeisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNetwork;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
