// Copyright 2026 The qvarsched Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qvarsched/cli.hpp"
#include "qvarsched/encoder.hpp"
#include "qvarsched/io.hpp"
#include "test_support.hpp"

namespace qvarsched {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return (fs::path(testing::data_dir()) / name).string(); }

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qvarsched_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                    ->current_test_info()
                                                    ->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &text) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    fs::path dir_;
};

TEST_F(CliTest, EncodePrintsReferenceDump) {
    const Outcome o = invoke({"encode", data("eohl.yaml")});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("constant 55.5"), std::string::npos);
    // The dump re-parses into the library's model.
    const auto p = load_problem(data("eohl.yaml"));
    EXPECT_EQ(parse_ising(o.out), encode(p, build_layout(p)));
}

TEST_F(CliTest, EncodeCloudInstanceHasThirteenQubits) {
    const Outcome o = invoke({"encode", data("ecfl.yaml")});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("\nqubits 13\n"), std::string::npos);
}

TEST_F(CliTest, EncodeWritesOutputFile) {
    const Outcome o = invoke({"encode", data("eohl.yaml"), "--out", (dir_ / "h.txt").string()});
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    EXPECT_NE(slurp(dir_ / "h.txt").find("constant 55.5"), std::string::npos);
}

TEST_F(CliTest, MalformedProblemExitsWithParseCode) {
    const fs::path bad = write("bad.yaml", "format: qvarsched-v1\nvariant: EOHL\nprocesses:\n"
                                           "  - {weight: -1, values: [1]}\nnodes:\n"
                                           "  - {capacity: 2}\n");
    const Outcome o = invoke({"encode", bad.string()});
    EXPECT_EQ(o.code, cli::kParseFailure);
    EXPECT_NE(o.err.find("processes[0].weight"), std::string::npos) << o.err;
    EXPECT_NE(o.err.find("line 4"), std::string::npos) << o.err;
}

TEST_F(CliTest, UnknownCommandOrFlagIsParseFailure) {
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kParseFailure);
    EXPECT_EQ(invoke({"encode"}).code, cli::kParseFailure);
    EXPECT_EQ(invoke({"solve", "x.yaml", "--mode", "noisy"}).code, cli::kParseFailure);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, OracleReproducesTableTwo) {
    const std::vector<std::tuple<std::string, int, int, int, int>> rows{
        {"eohl.yaml", 8, 2, 4, 256},
        {"eofl.yaml", 10, 2, 4, 1024},
        {"echl.yaml", 11, 2, 6, 2048},
        {"ecfl.yaml", 13, 2, 21, 8192}};
    for (const auto &[file, q, best, feasible, total] : rows) {
        const Outcome o = invoke({"oracle", data(file)});
        ASSERT_EQ(o.code, 0) << o.err;
        EXPECT_NE(o.out.find("qubits " + std::to_string(q) + "\n"), std::string::npos);
        EXPECT_NE(o.out.find("best " + std::to_string(best) + "\n"), std::string::npos);
        EXPECT_NE(o.out.find("feasible " + std::to_string(feasible) + "\n"), std::string::npos);
        EXPECT_NE(o.out.find("total " + std::to_string(total) + "\n"), std::string::npos);
        EXPECT_NE(o.out.find("optimal_gain 6\n"), std::string::npos);
    }
}

TEST_F(CliTest, OracleFlagsInfeasibleInstance) {
    const fs::path toy = write("toy.yaml", "format: qvarsched-v1\nvariant: EOHL\nprocesses:\n"
                                           "  - {weight: 2, values: [1]}\nnodes:\n"
                                           "  - {capacity: 1}\n");
    const Outcome o = invoke({"oracle", toy.string()});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("infeasible true"), std::string::npos);
}

TEST_F(CliTest, OracleCapacityExceeded) {
    const Outcome o = invoke({"oracle", data("ecfl.yaml"), "--max-qubits", "12"});
    EXPECT_EQ(o.code, cli::kCapabilityExceeded);
    EXPECT_NE(o.err.find("13"), std::string::npos) << o.err;
}

TEST_F(CliTest, OracleOnFamilyInstance) {
    const fs::path f = dir_ / "echl4.yaml";
    ASSERT_EQ(invoke({"family", "--variant", "ECHL", "--processes", "4", "--out", f.string()}).code,
              0);
    const Outcome o = invoke({"oracle", f.string()});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("qubits 14\n"), std::string::npos);
}

std::string mask_wall_ms(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(',')) + "\n";
    }
    return out;
}

TEST_F(CliTest, SolveWritesCsvAndSummary) {
    const fs::path spec =
        write("spec.yaml", "format: qvarsched-v1\nproblem: " + data("eohl.yaml") +
                               "\nalgorithm: {ansatz: A4}\noptimizer: {max_iterations: 100, "
                               "restarts: 2}\nruns: 3\nseed: 5\noutput: res\n");
    const Outcome o = invoke({"solve", spec.string()});
    ASSERT_EQ(o.code, 0) << o.err;
    const std::string csv = slurp(dir_ / "res.csv");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_EQ(csv.rfind(
                  "instance_id,ansatz,seed,p_best,p_feas,c_best,c_feas,iterations,wall_ms\n", 0),
              0U);
    EXPECT_TRUE(fs::exists(dir_ / "res.json"));
    EXPECT_NE(o.out.find("p_best"), std::string::npos);

    // Flags override the file; same seed gives identical rows apart from timing.
    const Outcome again = invoke({"solve", spec.string(), "--runs", "2", "--out",
                                  (dir_ / "again").string()});
    ASSERT_EQ(again.code, 0) << again.err;
    const std::string second = slurp(dir_ / "again.csv");
    EXPECT_EQ(std::count(second.begin(), second.end(), '\n'), 3);
    const std::string third_path = (dir_ / "third").string();
    ASSERT_EQ(invoke({"solve", spec.string(), "--runs", "2", "--out", third_path}).code, 0);
    EXPECT_EQ(mask_wall_ms(second), mask_wall_ms(slurp(third_path + ".csv")));
}

TEST_F(CliTest, SolveQaoaEchoesParameters) {
    const fs::path spec =
        write("q.yaml", "format: qvarsched-v1\nproblem: " + data("eohl.yaml") +
                            "\nalgorithm: {ansatz: QAOA, reps: 3}\noptimizer: {max_iterations: "
                            "30, restarts: 1}\nseed: 1\n");
    const Outcome o = invoke({"solve", spec.string(), "--out", (dir_ / "q").string()});
    ASSERT_EQ(o.code, 0) << o.err;
    const std::string json = slurp(dir_ / "q.json");
    EXPECT_NE(json.find("\"parameters\": 6"), std::string::npos);
}

TEST_F(CliTest, SolveWithSampledModeAndShots) {
    const fs::path spec =
        write("s.yaml", "format: qvarsched-v1\nproblem: " + data("eohl.yaml") +
                            "\nalgorithm: {ansatz: A1}\noptimizer: {max_iterations: 20, "
                            "restarts: 1}\n");
    const Outcome o =
        invoke({"solve", spec.string(), "--mode", "sampled", "--shots", "128", "--seed", "3"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.rfind("instance_id,", 0), 0U);
}

TEST_F(CliTest, SolveRejectsOversizedInstance) {
    const fs::path spec = write("big.yaml", "format: qvarsched-v1\nproblem: " + data("ecfl.yaml") +
                                                "\nalgorithm: {ansatz: A1}\n");
    EXPECT_EQ(invoke({"solve", spec.string(), "--max-qubits", "10"}).code,
              cli::kCapabilityExceeded);
}

TEST_F(CliTest, SweepEmitsOneRowPerProcessCount) {
    const Outcome o = invoke({"sweep", "--variant", "ECHL", "--from", "2", "--to", "4",
                              "--iterations", "5", "--seed", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("ECHL-P2,A1,"), std::string::npos);
    EXPECT_NE(o.out.find("ECHL-P4,A1,"), std::string::npos);
    EXPECT_EQ(invoke({"sweep", "--from", "5", "--to", "3"}).code, cli::kParseFailure);
    EXPECT_EQ(invoke({"sweep", "--variant", "NOPE"}).code, cli::kParseFailure);
}

TEST_F(CliTest, FamilyOutputMatchesDataFile) {
    const Outcome o = invoke({"family", "--variant", "EOHL", "--processes", "3"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out, slurp(data("eohl.yaml")));
}

} // namespace
} // namespace qvarsched
