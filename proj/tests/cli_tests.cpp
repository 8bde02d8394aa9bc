// Exercises the installed command surface end to end: flag validation,
// exit codes, and byte-stable json output.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

const std::filesystem::path kFixtures = SCHREIER_FIXTURE_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(SCHREIER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string offline_env() {
    return "SCHREIER_OEIS_CACHE_DIR=" + (kFixtures / "oeis").string() +
           " SCHREIER_OEIS_BASE_URL=http://127.0.0.1:9";
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("count: three-way agreement on a table row") {
    const auto r = run_cli("count --family A --s 2 --p 1 --n 1..12 --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("504") != std::string::npos);
    CHECK(r.out.find("274") != std::string::npos);
    CHECK(r.out.find("status: OK") != std::string::npos);
}

TEST_CASE("count: single closed value") {
    const auto r = run_cli("count --family D --u 6 --n 12 --method closed --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,closed\n12,145\n");
}

TEST_CASE("count: golden json outputs are byte-stable") {
    const auto a = run_cli("count --family A --s 2 --p 1 --n 1..12 --method all --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == slurp(kFixtures / "golden" / "count_A_s2_p1_all.json"));

    const auto d = run_cli("count --family D --u 3 --n 1..12 --method all --format json");
    CHECK(d.exit_code == 0);
    CHECK(d.out == slurp(kFixtures / "golden" / "count_D_u3_all.json"));
}

TEST_CASE("count: exit codes for misuse and scale") {
    CHECK(run_cli("count --family A --s 2 --p 1 --n 1..60 --method enum").exit_code == 3);
    CHECK(run_cli("count --family A --u 3 --n 5").exit_code == 2);        // u with family A
    CHECK(run_cli("count --family D --n 5").exit_code == 2);              // D without u
    CHECK(run_cli("count --family Z --n 5").exit_code == 2);              // unknown family
    CHECK(run_cli("count --family A --s 2 --p 1 --n 5..1").exit_code == 2);
    CHECK(run_cli("count --family H --s 2 --p 1 --q 2 --n 1..8 --method recurrence").exit_code == 2);
    CHECK(run_cli("count --family A --s 2 --p 1").exit_code == 2);        // missing --n
}

TEST_CASE("verify: theorem and identity surfaces") {
    CHECK(run_cli("verify --theorem B --s 3 --p 2 --n-max 12").exit_code == 0);
    CHECK(run_cli("verify --theorem A --s 1 --p 1 --n-max 20 --no-enum").exit_code == 0);
    CHECK(run_cli("verify --identity EE5 --u 2..5 --n-max 30").exit_code == 0);
    CHECK(run_cli("verify --identity DIV_PQ --u 2..8").exit_code == 0);
    CHECK(run_cli("verify --identity EE10 --u 2 --n 4..10").exit_code == 2);  // domain
    CHECK(run_cli("verify --identity EE10 --u 2..8 --n-max 40").exit_code == 0);
    CHECK(run_cli("verify --theorem Q --s 1 --p 1 --n-max 10").exit_code == 2);
    CHECK(run_cli("verify --theorem A --identity OOT --n-max 10").exit_code == 2);
    CHECK(run_cli("verify --n-max 10").exit_code == 2);
}

TEST_CASE("discover: conjectured recurrences come back in display notation") {
    const auto one = run_cli("discover --family H --s 2 --p 1 --q 2 --terms 16 --max-order 6");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("a_n = a_{n-1} + 2a_{n-2} + a_{n-3}") != std::string::npos);

    const auto three = run_cli("discover --family H --s 2 --p 1 --q 4 --terms 18 --max-order 6");
    CHECK(three.exit_code == 0);
    CHECK(three.out.find("a_n = 3a_{n-1} - 3a_{n-2} + 3a_{n-3} + 2a_{n-4} + a_{n-5}") != std::string::npos);

    CHECK(run_cli("discover --family H --s 2 --p 1 --q 2 --terms 16 --max-order 2").exit_code == 1);
    CHECK(run_cli("discover --family H --s 2 --p 1 --q 2 --terms 10 --max-order 6").exit_code == 2);
}

TEST_CASE("oeis: offline alignment against committed fixtures") {
    const auto match =
        run_cli("oeis --id A000073 --family A --s 2 --p 1 --n-max 12 --offline", offline_env());
    CHECK(match.exit_code == 0);
    CHECK(match.out.find("MATCH") != std::string::npos);

    const auto colored =
        run_cli("oeis --id A193147 --family B --s 2 --p 2 --n-max 12 --offline", offline_env());
    CHECK(colored.exit_code == 0);

    const auto mismatch =
        run_cli("oeis --id A000045 --family D --u 4 --n-max 12 --offline", offline_env());
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.out.find("NO-MATCH") != std::string::npos);

    const auto cold = run_cli("oeis --id A999999 --family A --s 1 --p 1 --offline",
                              "SCHREIER_OEIS_CACHE_DIR=/nonexistent-cache-dir");
    CHECK(cold.exit_code == 4);

    CHECK(run_cli("oeis --id NOTANID --family A --s 1 --p 1 --offline", offline_env()).exit_code == 2);
}
