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


#include "vrvi/solver_config.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vrvi/errors.h"

namespace vrvi {
namespace {

std::string Num(double v) { return std::to_string(v); }

}  // namespace

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kVrEg:
      return "vr-eg";
    case Algorithm::kVrMp:
      return "vr-mp";
    case Algorithm::kVrFbf:
      return "vr-fbf";
    case Algorithm::kVrForb:
      return "vr-forb";
    case Algorithm::kDetEg:
      return "det-eg";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kVrEg, Algorithm::kVrMp, Algorithm::kVrFbf,
                      Algorithm::kVrForb, Algorithm::kDetEg}) {
    if (name == AlgorithmName(a)) return a;
  }
  return std::nullopt;
}

ResolvedParameters ResolveParameters(const VIProblem& problem,
                                     const SolverConfig& config) {
  problem.Validate();
  const Algorithm algo = config.algorithm;
  const char* name = AlgorithmName(algo);
  const bool euclidean_only = algo == Algorithm::kVrEg ||
                              algo == Algorithm::kVrFbf ||
                              algo == Algorithm::kVrForb;
  if (euclidean_only && problem.geometry.kind != GeometryKind::kEuclidean) {
    throw ConfigError(std::string(name) +
                      " supports only the Euclidean geometry; use vr-mp or "
                      "det-eg for the entropic setup");
  }
  if (!(config.gamma > 0.0 && config.gamma < 1.0)) {
    throw ConfigError("gamma must lie in (0, 1), got " + Num(config.gamma));
  }
  if (!(config.budget_epochs > 0.0)) {
    throw ConfigError("budget_epochs must be > 0");
  }
  if (!(config.eval_every_epochs > 0.0)) {
    throw ConfigError("eval_every_epochs must be > 0");
  }

  ResolvedParameters r;
  r.algorithm = algo;
  r.gamma = config.gamma;

  if (algo == Algorithm::kDetEg) {
    r.lipschitz = problem.operator_lipschitz;
    if (!(r.lipschitz > 0.0)) {
      throw ConfigError("det-eg needs a positive operator Lipschitz constant");
    }
    r.p = 1.0;
    r.alpha = 0.0;
    r.tau = config.tau.value_or(config.gamma / r.lipschitz);
    if (!(r.tau > 0.0)) throw ConfigError("tau must be > 0");
    if (config.enforce_step_bound && !(r.tau * r.lipschitz < 1.0)) {
      throw ConfigError("det-eg step " + Num(r.tau) + " violates tau * L_F < 1");
    }
    return r;
  }

  r.lipschitz = problem.oracle->lipschitz();
  if (!(r.lipschitz > 0.0)) {
    throw ConfigError("oracle Lipschitz constant must be positive");
  }
  const double p0 = problem.oracle->default_snapshot_probability();

  if (algo == Algorithm::kVrMp) {
    if (config.inner_loop_length) {
      r.inner_loop_length = *config.inner_loop_length;
    } else {
      const double base = config.p.value_or(p0);
      if (!(base > 0.0 && base <= 1.0)) {
        throw ConfigError("p must lie in (0, 1], got " + Num(base));
      }
      r.inner_loop_length =
          std::max<int64_t>(1, std::llround(1.0 / base));
    }
    if (r.inner_loop_length < 1) {
      throw ConfigError("inner loop length K must be >= 1");
    }
    r.p = 1.0 / static_cast<double>(r.inner_loop_length);
    r.alpha = config.alpha.value_or(1.0 - r.p);
  } else {
    double p = config.p.value_or(p0);
    if (algo == Algorithm::kVrForb && !config.p) p = std::min(p, 0.5);
    r.p = p;
    r.alpha = config.alpha.value_or(1.0 - p);
  }
  if (!(r.p > 0.0 && r.p <= 1.0)) {
    throw ConfigError("p must lie in (0, 1], got " + Num(r.p));
  }
  if (!(r.alpha >= 0.0 && r.alpha < 1.0)) {
    throw ConfigError("alpha must lie in [0, 1), got " + Num(r.alpha));
  }
  const double bound = algo == Algorithm::kVrForb
                           ? std::sqrt(r.alpha * (1.0 - r.alpha))
                           : std::sqrt(1.0 - r.alpha);
  r.tau = config.tau.value_or(config.gamma * bound / r.lipschitz);
  if (!(r.tau > 0.0)) {
    throw ConfigError(std::string(name) + ": tau must be > 0 (alpha = " +
                      Num(r.alpha) + " leaves no admissible step)");
  }
  if (config.enforce_step_bound && !(r.tau * r.lipschitz < bound)) {
    throw ConfigError(std::string(name) + ": step " + Num(r.tau) +
                      " violates tau * L < " +
                      (algo == Algorithm::kVrForb ? "sqrt(alpha (1 - alpha))"
                                                  : "sqrt(1 - alpha)") +
                      " = " + Num(bound) + " with L = " + Num(r.lipschitz));
  }
  return r;
}

}  // namespace vrvi
