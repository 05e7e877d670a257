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


#include "vrvi/run.h"

#include <chrono>
#include <cmath>

#include "vrvi/errors.h"
#include "vrvi/metrics.h"
#include "vrvi/rng.h"

namespace vrvi {

RunTrace Run(const VIProblem& problem, const SolverConfig& config,
             const StepObserver& observer) {
  const ResolvedParameters params = ResolveParameters(problem, config);
  const auto start = std::chrono::steady_clock::now();
  const double unit = problem.oracle->full_cost();

  RunTrace trace;
  trace.params = params;
  trace.problem_name = problem.name;
  trace.oracle_name = problem.oracle->name();
  trace.seed = config.seed;
  trace.epoch_unit = unit;

  auto record = [&](double cost, const Point& zbar) {
    TraceRow row;
    row.cost = cost;
    row.epoch = cost / unit;
    row.gap = EvaluateGap(problem, zbar, &trace.clipped_gaps);
    if (problem.known_solution) {
      row.dist_sq = SquaredDistance(zbar, *problem.known_solution);
    }
    row.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    trace.rows.push_back(row);
  };

  record(0.0, problem.initial_point);

  const double budget = config.budget_epochs * unit;
  const double interval = config.eval_every_epochs * unit;
  Rng rng(config.seed);
  RngDrawSource draws(rng);
  try {
    SolverState state = InitState(problem, params);
    double next_eval = interval;
    while (state.cost < budget) {
      Step(state, problem, draws);
      const bool keep_going = !observer || observer(state);
      const bool last = !keep_going || state.cost >= budget;
      bool reached = false;
      if (state.cost >= next_eval || last) {
        record(state.cost, AveragedIterate(state, problem));
        next_eval = (std::floor(state.cost / interval) + 1.0) * interval;
        reached = config.target_gap && trace.rows.back().gap <= *config.target_gap;
      }
      trace.iterations = state.iterations;
      if (!keep_going || reached) break;
    }
  } catch (const NumericError& e) {
    trace.numeric_failure = true;
    trace.failure_message = e.what();
  }
  return trace;
}

}  // namespace vrvi
