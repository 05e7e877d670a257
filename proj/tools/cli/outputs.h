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


#ifndef VRVI_CLI_OUTPUTS_H_
#define VRVI_CLI_OUTPUTS_H_

#include <string>
#include <vector>

#include "cli/run_spec.h"
#include "vrvi/run.h"

namespace vrvi::cli {

inline constexpr char kTraceHeader[] = "cost,epoch,gap,dist_sq,wall_ns";

// Writes `content` to a temporary sibling and renames it over `path`.
void WriteFileAtomic(const std::string& path, const std::string& content);

// CSV body with the header above. dist_sq is empty when z* is unknown;
// wall_ns is written as 0 when `with_timing` is false.
std::string TraceCsv(const RunTrace& trace, bool with_timing = true);

// Metadata sidecar of one run (parameters, epoch unit, status).
std::string TraceMetaJson(const RunTrace& trace, const RunSpec& spec,
                          const VIProblem& problem);

struct LabeledTrace {
  Algorithm algorithm;
  uint64_t seed;
  const RunTrace* trace;
};

// First recorded epoch whose gap is <= target, or +inf.
double EpochsToTarget(const RunTrace& trace, double target);

// Per-algorithm mean gap on the checkpoint grid 0, e, 2e, ..., budget
// (e = eval_every). A run that stopped early holds its last value.
// Columns: algorithm,epoch,mean_gap,min_gap,max_gap,runs
std::string SummaryCsv(const std::vector<LabeledTrace>& traces,
                       const RunSpec& spec);

// algorithm,seed,epochs_to_target plus one median row per algorithm.
std::string TargetsCsv(const std::vector<LabeledTrace>& traces, double target);

// Log-linear plot of the per-algorithm mean gap against epochs.
std::string GapPlotSvg(const std::vector<LabeledTrace>& traces,
                       const RunSpec& spec, const std::string& title);

}  // namespace vrvi::cli

#endif  // VRVI_CLI_OUTPUTS_H_
