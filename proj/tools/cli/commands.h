// Copyright 2026 The vrvi Authors.
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


#ifndef VRVI_CLI_COMMANDS_H_
#define VRVI_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cli/run_spec.h"
#include "cli/verify_suites.h"

namespace vrvi::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     // a verify suite or run failed
inline constexpr int kExitBadInput = 2;    // invalid spec, missing file
inline constexpr int kExitNumeric = 3;     // numeric failure, partial output

// Worker count: VRVI_THREADS if set to a positive integer, else the
// hardware concurrency, never more than `tasks`.
int WorkerCount(size_t tasks);

// Runs every (algorithm x seed) pair of `spec` and writes, under
// <out>/<name>/, one <algo>-seed<s>.csv and .json per run, summary.csv,
// targets.csv when a target gap is set, and gap.svg.
int CmdRun(const RunSpec& spec, std::ostream& log, std::ostream& err);

int CmdVerify(const VerifyOptions& options, std::ostream& out);

// Writes a generated matrix in MatrixMarket format.
int CmdGen(const std::string& generator, int n, int m, uint64_t seed,
           const std::string& out_path, std::ostream& err);

}  // namespace vrvi::cli

#endif  // VRVI_CLI_COMMANDS_H_
