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


#ifndef VRVI_RUN_H_
#define VRVI_RUN_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vrvi/problems.h"
#include "vrvi/solver_config.h"
#include "vrvi/solvers.h"

namespace vrvi {

struct TraceRow {
  double cost = 0.0;   // cumulative oracle cost
  double epoch = 0.0;  // cost / epoch unit
  double gap = 0.0;
  std::optional<double> dist_sq;  // |zbar - z*|^2 when z* is known
  int64_t wall_ns = 0;
};

struct RunTrace {
  std::vector<TraceRow> rows;
  ResolvedParameters params;
  std::string problem_name;
  std::string oracle_name;
  uint64_t seed = 0;
  double epoch_unit = 1.0;
  int64_t iterations = 0;
  int64_t clipped_gaps = 0;
  // Set when a NumericError stopped the run; rows hold the partial trace.
  bool numeric_failure = false;
  std::string failure_message;
};

// Observer called after every iteration; return false to stop early.
using StepObserver = std::function<bool(const SolverState&)>;

// Runs config.algorithm on `problem` until budget_epochs of oracle cost are
// spent. The first row is the initial point at cost 0; a row is recorded
// whenever another eval_every_epochs of cost has accrued, and once more at
// the end, or until a recorded gap reaches config.target_gap. Metrics are evaluated on the averaged iterate. Deterministic given
// config.seed (wall_ns aside). ConfigError and InvalidInputError propagate;
// NumericError is captured in the trace.
RunTrace Run(const VIProblem& problem, const SolverConfig& config,
             const StepObserver& observer = nullptr);

}  // namespace vrvi

#endif  // VRVI_RUN_H_
