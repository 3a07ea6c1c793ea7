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

// Subcommands of the `ptrack` tool. Each returns a process exit code and
// writes reports to `out`, diagnostics to `err`, so they run in-process
// under test. A path of "-" means standard output.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptrack::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitCapacity = 3,
};

struct GenOptions {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string weights = "1,1,1,1";  // cnot,rx4,rz4,rz8
  std::string out = "-";
};

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

struct LowerOptions {
  std::string input;
  std::string out = "-";
};

int cmd_lower(const LowerOptions& opts, std::ostream& out, std::ostream& err);

struct RunOptions {
  std::string circuit;
  std::string mode = "deferred";  // immediate | deferred
  std::uint64_t seed = 0;
  std::string input = "zero";  // zero | basis:<bits> | random:<seed> | file:<path>
  std::optional<std::string> record_out;  // required in deferred mode
  std::string state_out = "-";
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct TrackOptions {
  std::string circuit;
  std::string record;
  std::string out = "-";
};

int cmd_track(const TrackOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t trials = 1000;
  std::size_t max_n = 5;
  std::size_t max_m = 25;
  std::uint64_t seed = 1;
  std::optional<std::string> diff_out;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<std::size_t> n_list = {100, 1100, 2100, 3100, 4100, 5100};
  std::vector<std::size_t> m_list = {1000, 5000, 10000, 20000, 50000};
  std::uint64_t seed = 1;
  std::size_t repeats = 5;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double tracking_time = 0.0;  // seconds, median over repeats
  std::size_t corrections_with_tracking = 0;
  double expected_corrections_without = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// Each repeat tracks a distinct seeded circuit; generation and record
/// synthesis are excluded from the timing.
BenchReport run_bench(const BenchOptions& opts);

std::string format_bench(const BenchReport& report);

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches. Usage errors return kExitInputError.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ptrack::cli
