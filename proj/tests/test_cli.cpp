// Copyright 2026 The qclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
    int exit_code{-1};
    std::string out;
};

// Runs the CLI with stderr discarded.
Result cli(const std::string &args) {
    const std::string cmd = std::string(QCLASS_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string &name) { return std::string(QCLASS_DATA_DIR) + "/" + name; }

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Cli, ExampleFiveQubitExact) {
    const auto r = cli("example 5q-ex1");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["rho10"].get<double>(), 0.25, 1e-9);
    EXPECT_NEAR(j["rho11"].get<double>(), 0.125, 1e-9);
    EXPECT_EQ(j["schema_version"], 1);
}

TEST(Cli, ExampleFourteenQubitSampled) {
    const auto r = cli("example 14q-ex1 --shots 8192 --seed 1");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    const double ratio = j["ratio"].get<double>();
    EXPECT_GE(ratio, 1.7);
    EXPECT_LE(ratio, 2.3);
    EXPECT_EQ(j["histogram"]["shots"], 8192);
}

TEST(Cli, ExampleFourteenQubitTwoExact) {
    const auto r = cli("example 14q-ex2");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["rho11"].get<double>(), 0.0);
}

TEST(Cli, ExampleOnStarGraph) {
    const auto r = cli("example 5q-ex1 --graph " + data("star5.json"));
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j["swap_count"].get<int>(), 0);
    EXPECT_NEAR(j["rho10"].get<double>(), 0.25, 1e-9);
}

TEST(Cli, ExampleUnknownName) { EXPECT_EQ(cli("example 99q").exit_code, 3); }

TEST(Cli, ClassifySchedule) {
    const auto r = cli("classify " + data("schedule_train.csv") + " " + data("schedule_test.csv") +
                       " --metric aip --pad");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["predicted"]["label"], "B");
}

TEST(Cli, ClassifyLoneSample) {
    const auto r = cli("classify " + data("5q_ex1_train.csv") + " " + data("5q_ex1_train.csv"));
    // Two rows in the test file is an input error.
    EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, ClassifyTieIsAmbiguous) {
    const auto r = cli("classify " + data("tie_train.csv") + " " + data("tie_test.csv"));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["predicted"]["class"].is_null());
}

TEST(Cli, ClassifySipNeedsSign) {
    const std::string files = data("14q_ex2_train.csv") + " " + data("14q_ex2_test.csv");
    EXPECT_EQ(cli("classify " + files + " --metric sip").exit_code, 4);
    const auto r = cli("classify " + files + " --metric sip --sign mismatches");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["predicted"]["class"], 0);
}

TEST(Cli, ClassifyWritesOutFile) {
    const std::string out = ::testing::TempDir() + "/qclass_report.json";
    const auto r = cli("classify " + data("5q_ex1_train.csv") + " " + data("5q_ex1_test.csv") +
                       " --out " + out);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(nlohmann::json::parse(slurp(out))["predicted"]["label"], "normal");
}

TEST(Cli, ParseErrorReportsLine) {
    const std::string bad = ::testing::TempDir() + "/qclass_bad.csv";
    std::ofstream(bad) << "label,r1,r2\na,1,0\nb,1,7\n";
    const std::string cmd = std::string(QCLASS_CLI) + " classify " + bad + " " +
                            data("tie_test.csv") + " 2>&1 >/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::array<char, 512> buf{};
    const std::size_t n = fread(buf.data(), 1, buf.size(), pipe);
    const int status = pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(status), 3);
    EXPECT_NE(std::string(buf.data(), n).find("line 3"), std::string::npos);
}

TEST(Cli, BadFlagIsInputError) {
    EXPECT_EQ(cli("classify a b --metric foo").exit_code, 3);
    EXPECT_EQ(cli("").exit_code, 3);
}

TEST(Cli, RouteConformantIsByteIdentical) {
    const auto r = cli("route " + data("conformant.txt") + " " + data("path3.json"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, slurp(data("conformant.txt")));
}

TEST(Cli, RouteInsertsOneSwap) {
    const auto r = cli("route " + data("cnot02.txt") + " " + data("path3.json"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "SWAP 0 1\nCNOT 1 2\n");
}

TEST(Cli, RouteExampleCircuitOnStar) {
    const std::string circuit = ::testing::TempDir() + "/qclass_5q.txt";
    ASSERT_EQ(cli("example 5q-ex1 --circuit-out " + circuit).exit_code, 0);
    const auto r = cli("route " + circuit + " " + data("star5.json"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.find("CSWAP"), std::string::npos);
}

TEST(Cli, RouteOversizedCircuit) {
    EXPECT_EQ(cli("route " + data("cnot02.txt") + " " + data("star5.json")).exit_code, 0);
    const std::string wide = ::testing::TempDir() + "/qclass_wide.txt";
    std::ofstream(wide) << "CNOT 0 3\n";
    EXPECT_EQ(cli("route " + wide + " " + data("path3.json")).exit_code, 3);
}

TEST(Cli, OracleTable) {
    const auto r = cli("oracle " + data("14q_ex2_train.csv") + " " + data("14q_ex2_test.csv"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("-64"), std::string::npos);
    const auto j = nlohmann::json::parse(
        cli("oracle --json " + data("14q_ex2_train.csv") + " " + data("14q_ex2_test.csv")).out);
    EXPECT_EQ(j["scores"][0]["sigma"], 0);
    EXPECT_EQ(j["scores"][1]["sigma"], -64);
}

TEST(Cli, OracleIdenticalTestHasZeroChi) {
    const auto j = nlohmann::json::parse(
        cli("oracle --json " + data("tie_train.csv") + " " + data("tie_test.csv")).out);
    EXPECT_EQ(j["scores"][0]["chi"], 1);
    const std::string t = ::testing::TempDir() + "/qclass_left.csv";
    std::ofstream(t) << "label,r1,r2\nx,1,0\n";
    const auto k = nlohmann::json::parse(cli("oracle --json " + data("tie_train.csv") + " " + t).out);
    EXPECT_EQ(k["scores"][0]["chi"], 0);
}

} // namespace
