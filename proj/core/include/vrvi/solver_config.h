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


#ifndef VRVI_SOLVER_CONFIG_H_
#define VRVI_SOLVER_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vrvi/problems.h"

namespace vrvi {

enum class Algorithm {
  kVrEg,    // loopless extragradient with variance reduction
  kVrMp,    // double-loop mirror-prox with variance reduction
  kVrFbf,   // forward-backward-forward with variance reduction
  kVrForb,  // forward-reflected-backward with variance reduction
  kDetEg,   // deterministic extragradient / mirror-prox baseline
};

const char* AlgorithmName(Algorithm algorithm);
// Accepts "vr-eg", "vr-mp", "vr-fbf", "vr-forb", "det-eg".
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

// User-facing parameters; unset values take the defaults described on
// ResolveParameters.
struct SolverConfig {
  Algorithm algorithm = Algorithm::kVrEg;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> tau;
  double gamma = 0.99;
  std::optional<int64_t> inner_loop_length;  // K, VrMp only
  double budget_epochs = 10.0;
  uint64_t seed = 0;
  // Metrics are recorded every `eval_every_epochs` epochs of oracle cost.
  double eval_every_epochs = 0.1;
  // When false the step-size bound is not checked. Only for experiments
  // that deliberately break it.
  bool enforce_step_bound = true;
  // Stop early once a recorded gap is at or below this value.
  std::optional<double> target_gap;
};

struct ResolvedParameters {
  Algorithm algorithm = Algorithm::kVrEg;
  double p = 1.0;
  double alpha = 0.0;
  double tau = 0.0;
  double gamma = 0.99;
  int64_t inner_loop_length = 1;
  // The constant tau is measured against: the oracle's mean-Lipschitz
  // constant, or the operator's for the deterministic baseline.
  double lipschitz = 0.0;
};

// Defaults, with p0 the oracle's default snapshot probability:
//   VrEg, VrFbf: p = p0, alpha = 1 - p, tau = gamma sqrt(1 - alpha) / L.
//   VrForb:      p = min(p0, 1/2), alpha = 1 - p,
//                tau = gamma sqrt(alpha (1 - alpha)) / L.
//   VrMp:        K = max(1, round(1 / p0)), alpha = 1 - 1/K, p = 1/K,
//                tau = gamma sqrt(1 - alpha) / L.
//   DetEg:       tau = gamma / L_F.
// Validation (ConfigError): p in (0, 1], alpha in [0, 1), tau > 0, gamma in
// (0, 1), and unless disabled tau L < sqrt(1 - alpha), or for VrForb
// tau L < sqrt(alpha (1 - alpha)), or for DetEg tau L_F < 1. VrEg, VrFbf and
// VrForb require the Euclidean geometry.
ResolvedParameters ResolveParameters(const VIProblem& problem,
                                     const SolverConfig& config);

}  // namespace vrvi

#endif  // VRVI_SOLVER_CONFIG_H_
