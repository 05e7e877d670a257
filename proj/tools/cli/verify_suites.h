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


#ifndef VRVI_CLI_VERIFY_SUITES_H_
#define VRVI_CLI_VERIFY_SUITES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrvi/metrics.h"
#include "vrvi/problems.h"
#include "vrvi/solver_config.h"

namespace vrvi::cli {

// Small strongly monotone finite-sum VI on the simplex product: N affine
// components M_i z + c_i with M_i = S_i + 0.1 I, S_i skew. Uniform sampling.
// With `on_simplex` false g = 0 and the solution is interior, so iterates
// never land on it exactly.
VIProblem MakeLyapunovTestProblem(uint64_t seed, int components = 3,
                                  int n = 3, int m = 3, bool on_simplex = true);

// Solution by deterministic extragradient on the last iterate, run until the
// natural residual is below `tolerance` (or `max_iterations`).
Point SolveReference(const VIProblem& problem, double tolerance = 1e-13,
                     int64_t max_iterations = 2000000);

struct LyapunovReport {
  // max_k E_k[Phi_{k+1}] - Phi_k over the run; <= 0 is a decrease.
  double max_increase = 0.0;
  double min_phi = 0.0;
  double final_phi = 0.0;
  int iterations = 0;
};

// Runs `iterations` steps of config.algorithm. Before each step the
// conditional expectation of Phi after the step is computed exactly by
// enumerating the component draw and the snapshot coin on copies of the
// state, then the real step is taken with the seeded RNG. Needs an oracle
// whose sampling plan does not depend on the anchors.
LyapunovReport ExactLyapunovDecrease(const VIProblem& problem,
                                     const SolverConfig& config,
                                     const Point& z_star, int iterations,
                                     LyapunovKind kind);

// Minimum of Phi along one seeded run.
double MinLyapunovAlongRun(const VIProblem& problem,
                           const SolverConfig& config, const Point& z_star,
                           int iterations, LyapunovKind kind);

struct VerifyOptions {
  // Multiplies every stochastic estimate F_xi; 1 leaves oracles untouched.
  double oracle_bias = 1.0;
  // Forces tau = value / L in the Lyapunov suite, bypassing the bound check.
  std::optional<double> tau_times_lipschitz;
  uint64_t seed = 20240601;
  // Suite names to run; empty runs all of them.
  std::vector<std::string> only;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  int checks = 0;
  std::string detail;
  double seconds = 0.0;
};

std::vector<SuiteResult> RunVerifySuites(const VerifyOptions& options);

std::string FormatSuiteTable(const std::vector<SuiteResult>& results);

}  // namespace vrvi::cli

#endif  // VRVI_CLI_VERIFY_SUITES_H_
