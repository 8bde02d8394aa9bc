#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schreier/bigint.hpp"
#include "schreier/sequence.hpp"

namespace schreier {

// Validated OEIS identifier: 'A' followed by exactly six digits.
class OeisId {
public:
    explicit OeisId(std::string_view text);
    const std::string& str() const { return id_; }
    std::string digits() const { return id_.substr(1); }
    std::string bfile_name() const { return "b" + digits() + ".txt"; }
    std::string bfile_path() const { return "/" + id_ + "/" + bfile_name(); }
    bool operator==(const OeisId&) const = default;

private:
    std::string id_;
};

struct BFileEntry {
    long long index = 0;
    BigInt value;
};

// Parsed b-file: "index value" lines, '#' comments skipped, indices
// strictly increasing.
struct BFile {
    OeisId id;
    std::vector<BFileEntry> entries;
    std::chrono::system_clock::time_point fetched_at;

    long long first_index() const { return entries.front().index; }
    long long last_index() const { return entries.back().index; }
};

class OeisError : public std::runtime_error {
public:
    enum class Kind { network, parse, not_found };
    OeisError(Kind kind, const std::string& message, int line = 0)
        : std::runtime_error(message), kind_(kind), line_(line) {}
    Kind kind() const { return kind_; }
    int line() const { return line_; }  // offending line for parse errors

private:
    Kind kind_;
    int line_;
};

enum class FetchPolicy { cache_first, refresh };

struct OeisClientOptions {
    std::string base_url = "https://oeis.org";
    std::filesystem::path cache_dir;
    bool offline = false;
    std::chrono::milliseconds min_request_interval{1000};

    // Reads SCHREIER_OEIS_BASE_URL, SCHREIER_OEIS_CACHE_DIR and falls back
    // to $XDG_CACHE_HOME/schreier/oeis (or ~/.cache/schreier/oeis).
    static OeisClientOptions from_env();
};

// Downloads and caches b-files. Requests are serialized process-wide and
// spaced at least min_request_interval apart; cache writes go through a
// temp file and an atomic rename, so concurrent readers never observe a
// partial file.
class OeisClient {
public:
    OeisClient() : OeisClient(OeisClientOptions::from_env()) {}
    explicit OeisClient(OeisClientOptions options);

    // cache_first reads the on-disk copy when present and never touches
    // the network; refresh re-downloads and overwrites. Throws OeisError
    // (network / parse / not_found).
    BFile fetch_bfile(const OeisId& id, FetchPolicy policy = FetchPolicy::cache_first) const;

    const OeisClientOptions& options() const { return options_; }

private:
    OeisClientOptions options_;
};

// Parse b-file text; file_label only decorates error messages.
BFile parse_bfile(const OeisId& id, std::string_view text, const std::string& file_label = "");

struct AlignmentReport {
    bool match = false;
    int shift = 0;    // reference index = computed index + shift
    long long matched = 0;
    std::optional<std::pair<long long, long long>> first_mismatch;  // (computed, reference) indices
    std::string status() const { return match ? "MATCH" : "NO-MATCH"; }
};

// Finds the shift in [-5, 5] maximizing the run of consecutive agreement
// starting at the first overlapping computed index; MATCH iff that run
// covers the entire overlap and is at least min_match long.
AlignmentReport align(const BigSequence& computed, const BFile& reference, long long min_match = 8);

}  // namespace schreier
