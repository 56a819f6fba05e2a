#include "qinv/io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(QINV_CLI_PATH) + " " + args + " 2>&1";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(QINV_DATA_DIR) + "/" + name; }

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / ("qinv_cli_" + name)).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, VerifyS3) {
    const std::string out = temp("s3.json");
    const CliResult r = run("verify --manifold " + data("s3.json") + " --primes 5,7,11 --out " + out);
    EXPECT_EQ(r.code, 0) << r.out;
    const auto doc = qinv::read_json_file(out);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["reports"].size(), 3u);
    for (const auto& rep : doc["reports"]) {
        EXPECT_EQ(rep["lambda"]["coeffs"][0], "1");
        EXPECT_EQ(rep["lambda"]["coeffs"][1], "0");
    }
    std::filesystem::remove(out);
}

TEST(Cli, VerifyTwoLensSpacesWithCsv) {
    const std::string out = temp("l2l3.json"), csv = temp("l2l3.csv");
    const CliResult r = run("verify --manifold " + data("lens_2_plus_lens_3.json") + " --primes 7,11,13 --out " + out + " --csv " + csv);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("pass"), std::string::npos);
    EXPECT_EQ(slurp(csv).rfind("K,n,a_n,lambda_n_mod_K", 0), 0u);
    std::filesystem::remove(out);
    std::filesystem::remove(csv);
}

TEST(Cli, VerifyOnlySkippedExitsTwo) {
    const CliResult r = run("verify --manifold " + data("lens_5_1.json") + " --primes 5");
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_NE(r.out.find("skipped"), std::string::npos);
}

TEST(Cli, VerifyMixedSkipAndPassExitsZero) {
    EXPECT_EQ(run("verify --manifold " + data("lens_5_1.json") + " --primes 5,7").code, 0);
}

TEST(Cli, ReportsAreDeterministicApartFromTimings) {
    const std::string a = temp("det_a.json"), b = temp("det_b.json");
    ASSERT_EQ(run("verify --manifold " + data("lens_3_with_colored_unknot.json") + " --primes 5,7,11 --out " + a).code, 0);
    ASSERT_EQ(run("verify --manifold " + data("lens_3_with_colored_unknot.json") + " --primes 5,7,11 --out " + b).code, 0);
    auto strip = [](qinv::Json d) {
        for (auto& r : d["reports"]) r.erase("timings_ms");
        return d.dump();
    };
    EXPECT_EQ(strip(qinv::read_json_file(a)), strip(qinv::read_json_file(b)));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(Cli, LensPrintsMatchingValues) {
    const CliResult r = run("lens --p 2 --K 5");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("Z' closed form    = q^2 + q^3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("Z' surgery sum    = q^2 + q^3   [ok]"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
    EXPECT_EQ(run("lens --p 10 --K 5").code, 2);
}

TEST(Cli, GaussChecks) {
    EXPECT_EQ(run("gauss --K 7 --p 3 --m 2").code, 0);
    EXPECT_EQ(run("gauss --K 7 --p 3 --m 2 --depth 6").code, 0);
    EXPECT_EQ(run("gauss --K 7 --p 14 --m 1").code, 2);
}

TEST(Cli, OhtsukiTable) {
    const CliResult r = run("ohtsuki --manifold " + data("lens_5_1.json") + " --depth 3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("h1 = 5"), std::string::npos);
    EXPECT_NE(r.out.find("1/5"), std::string::npos);
    const CliResult j = run("ohtsuki --dtable " + data("dtable_unknot_minus3.json") + " --depth 4 --json");
    EXPECT_EQ(j.code, 0) << j.out;
    const auto doc = qinv::Json::parse(j.out);
    EXPECT_EQ(doc["lambda"]["coeffs"][0], "1/3");
    EXPECT_EQ(qinv::hseries_from_json(doc["lambda"]), qinv::tcc_lens(3, 5).lambda);
    EXPECT_EQ(run("ohtsuki --dtable " + data("dtable_in_lens_2.json") + " --depth 4").code, 0);
    EXPECT_EQ(run("ohtsuki --depth 4").code, 1);
}

TEST(Cli, TruncationEnvironmentVariable) {
    const CliResult r = run("lens --p 3 --K 5", "QINV_TRUNC=20");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("O(h^20)"), std::string::npos) << r.out;
}

TEST(Cli, Symmetry) {
    const CliResult r = run("symmetry --p 2 --K 7");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, Errors) {
    const std::string bad = temp("bad.json");
    std::ofstream(bad) << "{ nope";
    EXPECT_EQ(run("verify --manifold " + bad + " --primes 5").code, 1);
    EXPECT_EQ(run("verify --manifold " + data("s3.json") + " --primes 9").code, 1);
    EXPECT_EQ(run("lens --p 2 --K 9").code, 1);
    EXPECT_NE(run("lens --p 2").code, 0);
    EXPECT_NE(run("").code, 0);
    std::filesystem::remove(bad);
}

TEST(Cli, Selftest) {
    const CliResult r = run("selftest");
    EXPECT_EQ(r.code, 0) << r.out;
    for (int i = 1; i <= 9; ++i) EXPECT_NE(r.out.find("PASS criterion " + std::to_string(i) + ":"), std::string::npos) << i;
}
