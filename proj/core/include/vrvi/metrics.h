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


#ifndef VRVI_METRICS_H_
#define VRVI_METRICS_H_

#include <cstdint>

#include "vrvi/matrix_game.h"
#include "vrvi/point.h"
#include "vrvi/problems.h"
#include "vrvi/solvers.h"

namespace vrvi {

// Rounding noise below zero that is clipped to zero rather than reported.
inline constexpr double kGapClipTolerance = 1e-12;

// max_i (Ax)_i - min_j (A^T y)_j for z on the simplex product (1e-9
// tolerance; InvalidInputError otherwise). Values in [-1e-12, 0) are clipped
// to 0 and counted in *clipped when given.
double SimplexDualityGap(const MatrixGame& game, const Point& z,
                         int64_t* clipped = nullptr);

// Lower bound on max_{u in C} <F(u), z - u> + g(z) - g(u), where
// C = {u in dom g : |u - z0| <= radius}. Candidates: z0, z, the known
// solution, vertex pairs of the simplex product when their number is at most
// `sample_budget`, and `sample_budget` points from a fixed pseudo-random pool
// whose members do not depend on the radius, so the bound is monotone in
// `radius`. Negative values are clipped to 0.
double RestrictedGap(const VIProblem& problem, const Point& z, double radius,
                     int sample_budget = 256);

// |z - prox_g(z - F(z))|_2 with unit step; zero exactly at solutions.
double NaturalResidual(const VIProblem& problem, const Point& z);

// Gap measure selected by problem.gap_kind.
double EvaluateGap(const VIProblem& problem, const Point& z,
                   int64_t* clipped = nullptr);

enum class LyapunovKind { kEgFbf, kForb };

// kEgFbf: alpha |z_k - z*|^2 + ((1 - alpha) / p) |w_k - z*|^2.
// kForb adds 2 tau <F(z_k) - F(w_{k-1}), z* - z_k> + (1 - alpha)|z_k - w_{k-1}|^2.
double LyapunovPhi(LyapunovKind kind, const SolverState& state,
                   const VIProblem& problem, const Point& z_star);

}  // namespace vrvi

#endif  // VRVI_METRICS_H_
