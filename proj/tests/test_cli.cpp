#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef RSWT_CLI_BIN
#error "RSWT_CLI_BIN must point at the built CLI"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RSWT_CLI_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("matrix subcommand prints the 3x3 grid for (1,2)") {
    const RunResult r = run_cli("matrix \"(1,2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(" 1  1  0") != std::string::npos);
    CHECK(r.out.find(" 1 -1  0") != std::string::npos);
    CHECK(r.out.find(" 0  1  2") != std::string::npos);
    CHECK(r.out.find("S = {0,1}") != std::string::npos);
}

TEST_CASE("matrix subcommand JSON round-trips") {
    const RunResult r = run_cli("--json matrix \"(1,4)+(1,3)+(1,2)\"");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["T"] == 3);
    CHECK(j["expanded_size"] == 65);
    CHECK(j["rules"].size() == 9);
    CHECK(j["Rules"].size() == 8);
    CHECK(j["index_sets"]["S"] == nlohmann::json({0, 1, 4, 5, 32, 33, 36, 37}));
    // Row 4 of the rules matrix (1-based), with the -1 stripes.
    CHECK(j["rules"][3] == nlohmann::json({0, -1, 0, 0, 0, 1, 0, 0, 0}));
}

TEST_CASE("parse errors exit with code 2") {
    CHECK(run_cli("matrix \"(1,x)\"").exit_code == 2);
    CHECK(run_cli("matrix \"(1,1)\"").exit_code == 2);
    CHECK(run_cli("poly").exit_code == 2);          // missing argument
    CHECK(run_cli("frobnicate x").exit_code == 2);  // unknown subcommand
}

TEST_CASE("poly subcommand prints both polynomials") {
    const RunResult r = run_cli("poly \"(1,4)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x^7-2x^6-8x+16") != std::string::npos);
    CHECK(r.out.find("x^9-2x^8-2x^7+4x^6-8x^3+16x^2+16x-32") != std::string::npos);
    CHECK(r.out.find("min = char: no") != std::string::npos);

    const RunResult r2 = run_cli("poly \"(1,4)+(1,3)+(1,2)\"");
    CHECK(r2.out.find("min = char: yes") != std::string::npos);
}

TEST_CASE("weights subcommand, all methods agree with the reference list") {
    for (const char* method : {"recursion", "trace", "roots", "brute"}) {
        const RunResult r =
            run_cli(std::string("--json weights \"(1,2)\" 1 10 --method ") + method);
        CHECK(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.out);
        const std::array<const char*, 10> expect = {"1",  "0",  "4",   "4",   "16",
                                                    "24", "64", "112", "256", "480"};
        REQUIRE(j["rows"].size() == 10);
        for (size_t i = 0; i < 10; ++i) {
            CHECK(j["rows"][i]["weight"] == expect[i]);
            CHECK(j["rows"][i]["kind"] == (i == 0 ? "extended" : "defined"));
        }
    }
}

TEST_CASE("ecc subcommand exit code reflects the verdict") {
    const RunResult r = run_cli("--json ecc \"(1,4)\" 16");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["holds"] == true);
    CHECK(j["eect_applicable"] == false);
    CHECK(j["min_equals_char"] == false);
}

TEST_CASE("global flags are accepted after the subcommand too") {
    const RunResult r = run_cli("ecc \"(1,4)\" 16 --json");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["holds"] == true);
}

TEST_CASE("genfunc subcommand prints the reference rational function") {
    const RunResult r = run_cli("genfunc \"(1,4)\" 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("56x^6-32x^5+8x^4-4x^3+4x^2-2x+1") != std::string::npos);
    CHECK(r.out.find("16x^7-8x^6-2x+1") != std::string::npos);
    CHECK(r.out.find("1 0 4 4 16 0 64 112 256 480") != std::string::npos);
}

TEST_CASE("spectrum subcommand") {
    const RunResult r = run_cli("--json spectrum \"(1,2)\" 6");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["weight"] == "24");
    CHECK(j["plateaued"]["balanced"] == false);
    CHECK(j["plateaued"]["sign"] == -1);
    CHECK(j["plateaued"]["v"] == 2);
}

TEST_CASE("sweep produces deterministic CSV independent of worker count") {
    const std::string args = "--csv sweep --t1-max 4 --m-max 3 --n-max 14";
    const RunResult one = run_cli("--workers 1 " + args);
    const RunResult four = run_cli("--workers 4 " + args);
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.find("\"(1,4)+(1,3)+(1,2)\",3,9,true,true,6,6") != std::string::npos);
}
