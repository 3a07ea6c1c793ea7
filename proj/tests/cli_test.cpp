// Copyright 2026 The ptrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "ptrack/executor.hpp"
#include "ptrack/record_io.hpp"
#include "test_support.hpp"

namespace ptrack::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("ptrack_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "ptrack");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenWritesCanonicalCircuit) {
  EXPECT_EQ(run({"gen", "-n", "100", "-m", "1000", "--seed", "42", "-o",
                 path("a.txt")}),
            kExitOk);
  const Circuit c = parse_circuit(read("a.txt"));
  EXPECT_EQ(c.size(), 1000u);
  EXPECT_EQ(c.num_qubits(), 100u);
  EXPECT_EQ(run({"gen", "-n", "100", "-m", "1000", "--seed", "42"}), kExitOk);
  EXPECT_EQ(out_.str(), read("a.txt"));
}

TEST_F(CliTest, GenEdgeCases) {
  EXPECT_EQ(run({"gen", "-n", "2", "-m", "0", "--seed", "1"}), kExitOk);
  EXPECT_EQ(out_.str(), "qubits 2\n");
  EXPECT_EQ(run({"gen", "-n", "1", "-m", "5"}), kExitInputError);
  EXPECT_NE(err_.str().find("CNOT"), std::string::npos);
  EXPECT_EQ(run({"gen", "-n", "1", "-m", "5", "--weights", "0,1,1,1"}),
            kExitOk);
  EXPECT_EQ(run({"gen", "-n", "3"}), kExitInputError);
}

TEST_F(CliTest, LowerRewritesHadamard) {
  write("ct.txt", "qubits 1\nH 0\nT 0\n");
  EXPECT_EQ(run({"lower", path("ct.txt")}), kExitOk);
  EXPECT_EQ(out_.str(), "qubits 1\nRZ4 0\nRX4 0\nRZ4 0\nRZ8 0\n");
  write("bad.txt", "qubits 1\nS 0\n");
  EXPECT_EQ(run({"lower", path("bad.txt")}), kExitInputError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
}

TEST_F(CliTest, TrackExample) {
  write("c.txt", testing::kTwoQubitExample);
  write("r.txt", testing::kTwoQubitRecordText);
  EXPECT_EQ(run({"track", path("c.txt"), path("r.txt")}), kExitOk);
  EXPECT_EQ(out_.str(), "0 X\n1 X\n");
  EXPECT_EQ(run({"track", path("c.txt"), path("r.txt"), "-o", path("f.txt")}),
            kExitOk);
  EXPECT_EQ(read("f.txt"), "0 X\n1 X\n");
}

TEST_F(CliTest, TrackTrivialRecord) {
  write("c.txt", testing::kTwoQubitExample);
  write("r.txt", "X+\nZ0\nZ0\nZ0\n");
  EXPECT_EQ(run({"track", path("c.txt"), path("r.txt")}), kExitOk);
  EXPECT_EQ(out_.str(), "0 I\n1 I\n");
}

TEST_F(CliTest, TrackErrors) {
  write("c.txt", testing::kTwoQubitExample);
  write("short.txt", "X+\nZ1 Z0\n");
  EXPECT_EQ(run({"track", path("c.txt"), path("short.txt")}), kExitInputError);
  EXPECT_NE(err_.str().find("2 entries"), std::string::npos) << err_.str();
  EXPECT_NE(err_.str().find("4 rotational"), std::string::npos) << err_.str();

  write("branch.txt", "X+\nZ1\nZ0\nZ1\n");
  EXPECT_EQ(run({"track", path("c.txt"), path("branch.txt")}), kExitInputError);
  EXPECT_NE(err_.str().find("gate 2"), std::string::npos) << err_.str();

  EXPECT_EQ(run({"track", path("c.txt"), path("missing.txt")}),
            kExitInputError);
}

TEST_F(CliTest, RunDeferredWritesRecordAndState) {
  write("c.txt", testing::kTwoQubitExample);
  EXPECT_EQ(run({"run", path("c.txt"), "--seed", "9", "--input", "random:4",
                 "-r", path("r.txt"), "-s", path("s.txt")}),
            kExitOk);
  const MeasurementRecord rec = parse_record(read("r.txt"));
  EXPECT_EQ(rec.size(), 4u);
  EXPECT_EQ(rec.entries[0].basis, Basis::X);
  const std::string state = read("s.txt");
  EXPECT_EQ(std::count(state.begin(), state.end(), '\n'), 4);

  // Bit-identical on rerun.
  EXPECT_EQ(run({"run", path("c.txt"), "--seed", "9", "--input", "random:4",
                 "-r", path("r2.txt")}),
            kExitOk);
  EXPECT_EQ(out_.str(), state);
  EXPECT_EQ(read("r2.txt"), read("r.txt"));
}

TEST_F(CliTest, RunDeferredTrackedMatchesImmediate) {
  write("c.txt", testing::kTwoQubitExample);
  for (const char* seed : {"1", "2", "3", "4", "5"}) {
    ASSERT_EQ(run({"run", path("c.txt"), "--seed", seed, "--input",
                   "random:8", "-r", path("r.txt"), "-s", path("d.txt")}),
              kExitOk);
    ASSERT_EQ(run({"track", path("c.txt"), path("r.txt"), "-o", path("f.txt")}),
              kExitOk);
    ASSERT_EQ(run({"run", path("c.txt"), "--mode", "immediate", "--seed", seed,
                   "--input", "random:8", "-s", path("i.txt")}),
              kExitOk);
    StateVector deferred = parse_state(read("d.txt"));
    apply_frame(deferred, parse_frame(read("f.txt")));
    EXPECT_TRUE(equal_up_to_phase(deferred, parse_state(read("i.txt")), 1e-9));
  }
}

TEST_F(CliTest, RunEmptyCircuitKeepsInput) {
  write("c.txt", "qubits 2\n");
  write("in.txt", "0.6 0\n0 0\n0 0.8\n0 0\n");
  EXPECT_EQ(run({"run", path("c.txt"), "--input", "file:" + path("in.txt"),
                 "-r", path("r.txt")}),
            kExitOk);
  EXPECT_EQ(read("r.txt"), "");
  EXPECT_EQ(out_.str(),
            "0.600000000000 0.000000000000\n0.000000000000 0.000000000000\n"
            "0.000000000000 0.800000000000\n0.000000000000 0.000000000000\n");
}

TEST_F(CliTest, RunInputSpecs) {
  write("c.txt", "qubits 2\n");
  EXPECT_EQ(run({"run", path("c.txt"), "--mode", "immediate", "--input",
                 "basis:01"}),
            kExitOk);
  EXPECT_EQ(out_.str().substr(0, 60),
            "0.000000000000 0.000000000000\n1.000000000000 0.000000000000\n");
  EXPECT_EQ(run({"run", path("c.txt"), "--mode", "immediate", "--input",
                 "basis:1"}),
            kExitInputError);
  EXPECT_EQ(run({"run", path("c.txt"), "--mode", "immediate", "--input",
                 "nope"}),
            kExitInputError);
  EXPECT_EQ(run({"run", path("c.txt")}), kExitInputError);  // no --record-out
}

TEST_F(CliTest, RunCapacity) {
  write("big.txt", "qubits 20\nRX4 19\n");
  EXPECT_EQ(run({"run", path("big.txt"), "-r", path("r.txt")}), kExitCapacity);
  EXPECT_NE(err_.str().find("14"), std::string::npos);
}

TEST_F(CliTest, Verify) {
  EXPECT_EQ(run({"verify", "--trials", "200", "--max-n", "5", "--max-m", "25",
                 "--seed", "3", "--diff-out", path("tau.diff")}),
            kExitOk);
  EXPECT_NE(out_.str().find("200/200 passed"), std::string::npos);
  EXPECT_NE(out_.str().find("16/16"), std::string::npos);
  EXPECT_NE(out_.str().find("matches the oracle"), std::string::npos);
  EXPECT_EQ(read("tau.diff").rfind("# kind", 0), 0u);
  EXPECT_EQ(run({"verify", "--trials", "1", "--max-m", "0"}), kExitOk);
  EXPECT_NE(out_.str().find("1/1 passed"), std::string::npos);
  EXPECT_EQ(run({"verify", "--max-n", "15"}), kExitCapacity);
}

TEST_F(CliTest, Bench) {
  BenchOptions opts;
  opts.n_list = {1, 50};
  opts.m_list = {0, 2000};
  opts.repeats = 3;
  const BenchReport report = run_bench(opts);
  ASSERT_EQ(report.rows.size(), 4u);
  for (const BenchRow& r : report.rows) {
    EXPECT_GE(r.tracking_time, 0.0);
    EXPECT_LE(r.corrections_with_tracking, r.n);
  }
  EXPECT_EQ(report.rows[0].expected_corrections_without, 0.0);
  EXPECT_GT(report.rows[3].expected_corrections_without, 500.0);

  EXPECT_EQ(run({"bench", "--n-list", "10,20", "--m-list", "100", "--repeats",
                 "1"}),
            kExitOk);
  const std::string table = out_.str();
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), kExitInputError);
  EXPECT_EQ(run({"frobnicate"}), kExitInputError);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

}  // namespace
}  // namespace ptrack::cli
