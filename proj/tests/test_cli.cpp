#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

Result cli(const std::string& args) {
    std::string cmd = std::string("\"") + KIN2D_CLI + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path fresh_dir(const std::string& name) {
    auto d = fs::temp_directory_path() / ("kin2d-cli-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string scenario(const std::string& name) { return std::string(SCENARIO_DIR) + "/" + name + ".json"; }

const std::vector<std::string> kExamples{"gerono",   "ellipse",      "fivebar",  "fourbar-bresse",
                                         "fourbar-large", "cam-flat", "cam-undercut", "cam-swing",
                                         "cam-roller", "a0-regions", "profiles"};

const std::vector<std::string> kScenarios{"gerono",         "ellipse",  "fivebar",   "fourbar-coupler",
                                          "fourbar-motion", "cam-flat", "cam-swing", "cam-roller",
                                          "profile-p3g",    "profile-p4c"};

// every non-empty CSV line has the header's column count and the header is not numeric
void expect_table(const std::string& csv) {
    std::istringstream in(csv);
    std::string header;
    ASSERT_TRUE(std::getline(in, header));
    ASSERT_FALSE(header.empty());
    EXPECT_TRUE(std::isalpha(static_cast<unsigned char>(header[0]))) << header;
    auto cols = std::count(header.begin(), header.end(), ',');
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), cols) << line;
        ++rows;
    }
    EXPECT_GT(rows, 0);
}

} // namespace

TEST(Cli, ListsExamples) {
    auto r = cli("repro list");
    EXPECT_EQ(r.code, 0);
    for (auto& e : kExamples) EXPECT_NE(r.out.find(e + " "), std::string::npos) << e;
}

TEST(Cli, UnknownExampleExitsTwo) {
    auto r = cli("repro no-such-example");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("no-such-example"), std::string::npos);
}

TEST(Cli, ReproIsByteIdenticalAcrossRuns) {
    auto a = fresh_dir("a"), b = fresh_dir("b");
    for (auto& e : kExamples) {
        auto ra = cli("repro " + e + " --format report csv svg --out-dir " + a.string());
        auto rb = cli("repro " + e + " --format report csv svg --out-dir " + b.string());
        ASSERT_EQ(ra.code, 0) << e << "\n" << ra.out;
        ASSERT_EQ(rb.code, 0) << e;
        for (auto ext : {".report.txt", ".csv", ".svg"}) {
            auto fa = a / (e + ext), fb = b / (e + ext);
            ASSERT_TRUE(fs::exists(fa)) << fa;
            EXPECT_EQ(slurp(fa), slurp(fb)) << e << ext;
        }
        expect_table(slurp(a / (e + ".csv")));
        EXPECT_EQ(slurp(a / (e + ".svg")).rfind("<?xml", 0), 0u);
    }
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Cli, ReportPrintsFullPrecisionAndBothAngleUnits) {
    auto r = cli("repro gerono");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0.666666666666667"), std::string::npos) << r.out;
    auto f = cli("repro fourbar-large");
    ASSERT_EQ(f.code, 0);
    EXPECT_NE(f.out.find("deg"), std::string::npos);
    EXPECT_NE(f.out.find("rad"), std::string::npos);
}

TEST(Cli, RunsEveryScenario) {
    auto d = fresh_dir("run");
    for (auto& s : kScenarios) {
        auto r = cli("run " + scenario(s) + " --format report csv svg --out-dir " + d.string());
        ASSERT_EQ(r.code, 0) << s << "\n" << r.out;
        EXPECT_FALSE(r.out.empty());
        expect_table(slurp(d / (s + ".csv")));
        EXPECT_TRUE(fs::exists(d / (s + ".svg")));
    }
    fs::remove_all(d);
}

TEST(Cli, SweepAndRenderWriteOneKindEach) {
    auto d = fresh_dir("sweep");
    auto r = cli("sweep " + scenario("cam-flat") + " --out-dir " + d.string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(d / "cam-flat.csv"));
    EXPECT_FALSE(fs::exists(d / "cam-flat.svg"));
    auto first = slurp(d / "cam-flat.csv");
    ASSERT_EQ(cli("sweep " + scenario("cam-flat") + " --out-dir " + d.string()).code, 0);
    EXPECT_EQ(slurp(d / "cam-flat.csv"), first);

    r = cli("render " + scenario("fourbar-motion") + " --out-dir " + d.string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(d / "fourbar-motion.svg"));
    EXPECT_FALSE(fs::exists(d / "fourbar-motion.csv"));

    r = cli("render fivebar --out-dir " + d.string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(d / "fivebar.svg"));
    fs::remove_all(d);
}

TEST(Cli, SamplesFlagChangesTableLength) {
    auto d = fresh_dir("samples");
    ASSERT_EQ(cli("sweep " + scenario("gerono") + " --samples 17 --out-dir " + d.string()).code, 0);
    auto csv = slurp(d / "gerono.csv");
    auto lines = std::count(csv.begin(), csv.end(), '\n');
    ASSERT_EQ(cli("sweep " + scenario("gerono") + " --samples 33 --out-dir " + d.string()).code, 0);
    csv = slurp(d / "gerono.csv");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n') - lines, 16);
    fs::remove_all(d);
}

TEST(Cli, InvalidScenarioIsReported) {
    auto r = cli(std::string("run ") + TEST_DATA_DIR + "/bad-missing-field.json");
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.out.find("error"), std::string::npos) << r.out;
    EXPECT_NE(cli("run /nonexistent/scenario.json").code, 0);
    EXPECT_NE(cli("repro gerono --format pdf").code, 0);
}
