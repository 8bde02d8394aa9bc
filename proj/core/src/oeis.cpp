#include "schreier/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <httplib.h>

namespace schreier {

OeisId::OeisId(std::string_view text) {
    if (text.size() != 7 || text[0] != 'A' ||
        !std::all_of(text.begin() + 1, text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("OeisId: expected 'A' followed by six digits, got '" +
                                    std::string(text) + "'");
    }
    id_ = std::string(text);
}

OeisClientOptions OeisClientOptions::from_env() {
    OeisClientOptions opts;
    if (const char* url = std::getenv("SCHREIER_OEIS_BASE_URL")) opts.base_url = url;
    if (const char* dir = std::getenv("SCHREIER_OEIS_CACHE_DIR")) {
        opts.cache_dir = dir;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
        opts.cache_dir = std::filesystem::path(xdg) / "schreier" / "oeis";
    } else if (const char* home = std::getenv("HOME")) {
        opts.cache_dir = std::filesystem::path(home) / ".cache" / "schreier" / "oeis";
    } else {
        opts.cache_dir = std::filesystem::temp_directory_path() / "schreier-oeis-cache";
    }
    return opts;
}

BFile parse_bfile(const OeisId& id, std::string_view text, const std::string& file_label) {
    BFile result{id, {}, std::chrono::system_clock::now()};
    const std::string where = file_label.empty() ? id.bfile_name() : file_label;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream in{std::string(line)};
        long long index = 0;
        std::string value_text, extra;
        if (!(in >> index >> value_text) || (in >> extra)) {
            throw OeisError(OeisError::Kind::parse,
                            where + ": malformed b-file line " + std::to_string(line_no), line_no);
        }
        BigInt value;
        try {
            value = BigInt(value_text);
        } catch (const std::exception&) {
            throw OeisError(OeisError::Kind::parse,
                            where + ": malformed value on line " + std::to_string(line_no), line_no);
        }
        if (!result.entries.empty() && index <= result.entries.back().index) {
            throw OeisError(OeisError::Kind::parse,
                            where + ": indices not strictly increasing at line " + std::to_string(line_no),
                            line_no);
        }
        result.entries.push_back({index, std::move(value)});
    }
    if (result.entries.empty())
        throw OeisError(OeisError::Kind::parse, where + ": no entries", 0);
    return result;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.parent_path() /
                     (path.filename().string() + ".tmp-" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            std::filesystem::remove(tmp);
            throw OeisError(OeisError::Kind::network, "cache write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

// One request at a time across the whole process, spaced at least the
// configured interval apart.
std::mutex& fetch_mutex() {
    static std::mutex m;
    return m;
}

std::string http_get(const std::string& base_url, const std::string& path,
                     std::chrono::milliseconds interval) {
    std::lock_guard<std::mutex> lock(fetch_mutex());

    static std::chrono::steady_clock::time_point last_request{};
    const auto now = std::chrono::steady_clock::now();
    if (last_request.time_since_epoch().count() != 0 && now < last_request + interval) {
        std::this_thread::sleep_until(last_request + interval);
    }
    last_request = std::chrono::steady_clock::now();

    httplib::Client client(base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) {
        throw OeisError(OeisError::Kind::network,
                        "network error fetching " + base_url + path + ": " + httplib::to_string(res.error()));
    }
    if (res->status == 404) {
        throw OeisError(OeisError::Kind::not_found, "not found: " + base_url + path);
    }
    if (res->status != 200) {
        throw OeisError(OeisError::Kind::network,
                        "HTTP " + std::to_string(res->status) + " fetching " + base_url + path);
    }
    return res->body;
}

}  // namespace

OeisClient::OeisClient(OeisClientOptions options) : options_(std::move(options)) {
    if (options_.cache_dir.empty()) options_.cache_dir = OeisClientOptions::from_env().cache_dir;
}

BFile OeisClient::fetch_bfile(const OeisId& id, FetchPolicy policy) const {
    const std::filesystem::path cached = options_.cache_dir / id.bfile_name();

    if (policy == FetchPolicy::cache_first && std::filesystem::exists(cached)) {
        return parse_bfile(id, read_file(cached), cached.string());
    }
    if (options_.offline) {
        throw OeisError(OeisError::Kind::network,
                        "offline mode and no cached copy of " + id.bfile_name() + " under " +
                            options_.cache_dir.string());
    }

    const std::string body = http_get(options_.base_url, id.bfile_path(), options_.min_request_interval);
    BFile parsed = parse_bfile(id, body);  // validate before caching
    atomic_write(cached, body);            // cache stores the download verbatim
    return parsed;
}

AlignmentReport align(const BigSequence& computed, const BFile& reference, long long min_match) {
    if (computed.terms.empty() || reference.entries.empty())
        throw std::invalid_argument("align: both sequences must be nonempty");

    std::map<long long, const BigInt*> ref;
    for (const auto& e : reference.entries) ref[e.index] = &e.value;

    AlignmentReport best;
    bool have_best = false;
    for (int shift = -5; shift <= 5; ++shift) {
        AlignmentReport cand;
        cand.shift = shift;
        bool covered = true;
        bool in_overlap = false;
        for (long long i = computed.start_index; i <= computed.end_index(); ++i) {
            const auto it = ref.find(i + shift);
            if (it == ref.end()) {
                if (in_overlap) break;  // past the reference's end
                continue;               // before the reference starts
            }
            in_overlap = true;
            if (*it->second == computed.at(i)) {
                ++cand.matched;
            } else {
                cand.first_mismatch = {i, i + shift};
                covered = false;
                break;
            }
        }
        cand.match = in_overlap && covered && cand.matched >= min_match;
        // Prefer longer runs; break ties toward the smaller |shift|.
        const auto better = [&]() {
            if (!have_best) return true;
            if (cand.matched != best.matched) return cand.matched > best.matched;
            return std::abs(cand.shift) < std::abs(best.shift);
        };
        if (better()) {
            best = cand;
            have_best = true;
        }
    }
    return best;
}

}  // namespace schreier
