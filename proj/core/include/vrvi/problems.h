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


#ifndef VRVI_PROBLEMS_H_
#define VRVI_PROBLEMS_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vrvi/bilinear_oracle.h"
#include "vrvi/finite_sum_oracle.h"
#include "vrvi/geometry.h"
#include "vrvi/matrix_game.h"
#include "vrvi/oracle.h"
#include "vrvi/point.h"
#include "vrvi/prox.h"

namespace vrvi {

// How convergence is measured for a problem.
enum class GapKind {
  // max_i (Ax)_i - min_j (A^T y)_j on the simplex product.
  kSimplexDuality,
  // Sampled lower bound of the gap restricted to a ball around z0.
  kRestrictedMerit,
  // |z - prox_g(z - F(z))|, zero exactly at solutions.
  kNaturalResidual,
};

const char* GapKindName(GapKind kind);

// find z* with <F(z*), z - z*> + g(z) - g(z*) >= 0 for all z.
struct VIProblem {
  std::string name;
  std::shared_ptr<const StochasticOracle> oracle;
  ProxFriendlyG g;
  Geometry geometry;
  Point initial_point;
  std::optional<Point> known_solution;
  GapKind gap_kind = GapKind::kRestrictedMerit;
  // Set for bilinear problems.
  std::shared_ptr<const MatrixGame> matrix;
  // Lipschitz constant of the full operator in the geometry's norm; the
  // deterministic baseline steps with it.
  double operator_lipschitz = 0.0;
  // Radius of the ball used by kRestrictedMerit.
  double restricted_radius = 1.0;

  // Throws InvalidInputError if the pieces disagree on dimensions.
  void Validate() const;
};

// Simplex-constrained game min_x max_y <Ax, y>. Euclidean geometry accepts
// kFixedRowColNorms and kVariableEuclidean; the entropic geometry accepts
// kVariableEntropic. Other pairings throw ConfigError. With `exact_oracle`
// the stochastic oracle is replaced by F itself. z0 is the uniform point.
VIProblem MakeMatrixGame(std::shared_ptr<const MatrixGame> game,
                         GeometryKind geometry, SamplingScheme scheme,
                         bool exact_oracle = false);
VIProblem MakeMatrixGame(const Eigen::MatrixXd& a, GeometryKind geometry,
                         SamplingScheme scheme, bool exact_oracle = false);

// min f(x) subject to Ax = b as the VI with F = (A^T y, -Ax) and
// g = f(x) + <b, y>; y is unconstrained. z0 = 0.
VIProblem MakeLinearlyConstrained(PrimalFunction f,
                                  std::shared_ptr<const MatrixGame> a,
                                  const Eigen::VectorXd& b,
                                  SamplingScheme scheme,
                                  bool exact_oracle = false);

// A smooth convex function with its gradient.
struct SmoothFunction {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

// One constraint h_i(x) <= 0 and the declared Lipschitz bound of its
// finite-sum component on the region of interest.
struct ConstraintFunction {
  SmoothFunction h;
  double component_lipschitz = 0.0;
};

// min f(x) over lower <= x <= upper subject to h_i(x) <= 0, i = 1..N, as the
// VI with F(x, y) = (grad f + sum_i y_i grad h_i, -h(x)) and
// g = indicator(box) + indicator(y >= 0). Sampled uniformly with
// F_i = (grad f / N + y_i grad h_i, -h_i e_i), so F_xi = N F_i.
VIProblem MakeNonbilinearConstrained(SmoothFunction f,
                                     std::vector<ConstraintFunction> h,
                                     const Eigen::VectorXd& lower,
                                     const Eigen::VectorXd& upper);

// Generic finite-sum VI in the Euclidean geometry.
VIProblem MakeFiniteSumProblem(std::string name,
                               std::vector<OperatorComponent> components,
                               Eigen::Index x_dim, Eigen::Index y_dim,
                               ProxFriendlyG g, FiniteSumSampling sampling,
                               Point initial_point);

// Bilinear game with A = scale * R, R a block rotation by `angle`, and
// g = (mu / 2)|z|^2. The unique solution is z* = 0. n must be even.
// Uses the fixed row/column-norm oracle; z0 = (1, ..., 1).
VIProblem MakeStronglyConvexBilinear(int n, double mu, double scale,
                                     double angle = 0.7);

// Matching pennies and rock-paper-scissors with their uniform equilibria
// recorded as known solutions.
VIProblem MakeMatchingPennies(GeometryKind geometry, SamplingScheme scheme,
                              bool exact_oracle = false);
VIProblem MakeRockPaperScissors(GeometryKind geometry, SamplingScheme scheme,
                                bool exact_oracle = false);

}  // namespace vrvi

#endif  // VRVI_PROBLEMS_H_
