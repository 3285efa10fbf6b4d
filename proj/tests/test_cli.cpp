// End-to-end tests of the command-line tool: payload schemas, exit codes,
// cache life cycle, stream separation, and byte-level determinism.
#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with stderr dropped unless the caller redirects
// it; captures stdout verbatim.
RunResult run_cli(const std::string& args, const std::string& redirect = " 2>/dev/null") {
    const std::string cmd = std::string(ORBITOPE_CLI_PATH) + " " + args + redirect;
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    RunResult result;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fresh_cache_dir() {
    std::string templ = (fs::temp_directory_path() / "orbitope-cli-XXXXXX").string();
    char* got = mkdtemp(templ.data());
    EXPECT_NE(got, nullptr);
    return templ;
}

TEST(Cli, KeelPayloadShape) {
    const auto result = run_cli("keel --n 6");
    ASSERT_EQ(result.exit_code, 0);
    const json payload = json::parse(result.out);
    EXPECT_EQ(payload.at("schema"), "orbitope/keel/v1");
    EXPECT_EQ(payload.at("mode"), "paper");
    EXPECT_EQ(payload.at("quotient_dim"), 16);
    EXPECT_TRUE(payload.at("pass").get<bool>());
}

TEST(Cli, AdmissiblePayloadShape) {
    const auto result = run_cli("admissible --n 5");
    ASSERT_EQ(result.exit_code, 0);
    const json payload = json::parse(result.out);
    EXPECT_EQ(payload.at("schema"), "orbitope/admissible/v1");
    EXPECT_EQ(payload.at("counts").at("full_dim"), 36);
    EXPECT_EQ(payload.at("counts").at("total"), 56);
}

TEST(Cli, UsageErrorsExitNonzero) {
    EXPECT_NE(run_cli("betti --n 7").exit_code, 0);
    EXPECT_NE(run_cli("betti --n 4").exit_code, 0);
    EXPECT_NE(run_cli("betti --n 5 --mode bogus").exit_code, 0);
    EXPECT_NE(run_cli("").exit_code, 0);
    EXPECT_NE(run_cli("chambers --n 5 --parallelism 0").exit_code, 0);
}

TEST(Cli, BettiWithoutCacheNeedsBuild) {
    const auto dir = fresh_cache_dir();
    const auto result = run_cli("betti --n 5 --cache-dir " + dir);
    EXPECT_EQ(result.exit_code, 3);
    EXPECT_TRUE(result.out.empty());
    fs::remove_all(dir);
}

TEST(Cli, ChambersWritesCacheBettiReusesIt) {
    const auto dir = fresh_cache_dir();
    const auto build = run_cli("chambers --n 5 --cache-dir " + dir);
    ASSERT_EQ(build.exit_code, 0);
    EXPECT_TRUE(fs::exists(dir + "/chambers-n5.json"));

    const auto warm = run_cli("betti --n 5 --cache-dir " + dir);
    ASSERT_EQ(warm.exit_code, 0);
    const json payload = json::parse(warm.out);
    EXPECT_EQ(payload.at("schema"), "orbitope/betti/v1");
    EXPECT_EQ(payload.at("dims").at("0"), 1);
    EXPECT_EQ(payload.at("dims").at("5"), 1);
    EXPECT_EQ(payload.at("dims").at("6"), 1);
    EXPECT_EQ(payload.at("dims").at("8"), 1);
    EXPECT_EQ(payload.at("dims").at("7"), 0);
    fs::remove_all(dir);
}

TEST(Cli, CorruptedCacheExitsWithMessage) {
    const auto dir = fresh_cache_dir();
    {
        std::ofstream file(dir + "/chambers-n5.json");
        file << "{\"schema\": \"orbitope/chambers/v9\", \"n\": 5}";
    }
    const auto result = run_cli("betti --n 5 --cache-dir " + dir);
    EXPECT_EQ(result.exit_code, 4);
    EXPECT_TRUE(result.out.empty());
    fs::remove_all(dir);
}

TEST(Cli, NoCacheNeverTouchesDisk) {
    const auto dir = fresh_cache_dir();
    const auto result = run_cli("chambers --n 4 --no-cache --cache-dir " + dir);
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_FALSE(fs::exists(dir + "/chambers-n4.json"));
    fs::remove_all(dir);
}

TEST(Cli, StdoutCarriesOnlyThePayload) {
    const auto dir = fresh_cache_dir();
    // Progress lines go to stderr; stdout must parse as a single JSON value.
    const auto result = run_cli("chambers --n 4 --cache-dir " + dir);
    ASSERT_EQ(result.exit_code, 0);
    const json payload = json::parse(result.out);
    EXPECT_EQ(payload.at("schema"), "orbitope/chambers-report/v1");
    EXPECT_EQ(payload.at("count"), 8);
    fs::remove_all(dir);
}

TEST(Cli, MarkdownAndBothOutputs) {
    const auto md = run_cli("keel --n 4 --output markdown");
    ASSERT_EQ(md.exit_code, 0);
    EXPECT_EQ(md.out.rfind("# ", 0), 0u);
    EXPECT_NE(md.out.find("overall: PASS"), std::string::npos);

    const auto both = run_cli("keel --n 4 --output both");
    ASSERT_EQ(both.exit_code, 0);
    EXPECT_EQ(both.out.rfind("{", 0), 0u);
    EXPECT_NE(both.out.find("# "), std::string::npos);
}

TEST(Cli, EnvironmentVariableSetsCacheDir) {
    const auto dir = fresh_cache_dir();
    const std::string cmd = "ORBITOPE_CACHE_DIR=" + dir + " " + ORBITOPE_CLI_PATH +
                            " chambers --n 4 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    char buffer[4096];
    while (fread(buffer, 1, sizeof(buffer), pipe) > 0) {
    }
    const int status = pclose(pipe);
    EXPECT_EQ(WIFEXITED(status) ? WEXITSTATUS(status) : -1, 0);
    EXPECT_TRUE(fs::exists(dir + "/chambers-n4.json"));
    fs::remove_all(dir);
}

TEST(Cli, TwoColdRunsAreByteIdentical) {
    const auto a = run_cli("verify --n 5 --no-cache");
    const auto b = run_cli("verify --n 5 --no-cache");
    ASSERT_EQ(a.exit_code, 0);
    ASSERT_EQ(b.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    const json payload = json::parse(a.out);
    EXPECT_EQ(payload.at("schema"), "orbitope/verify/v1");
    EXPECT_TRUE(payload.at("pass").get<bool>());
    EXPECT_TRUE(payload.at("suites").contains("betti-exhaustive"));
}

}  // namespace
