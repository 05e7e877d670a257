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


#include "vrvi/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

#include "vrvi/errors.h"
#include "vrvi/geometry.h"
#include "vrvi/prox.h"
#include "vrvi/rng.h"

namespace vrvi {
namespace {

double ClipGap(double gap, int64_t* clipped) {
  if (gap < 0.0 && gap >= -kGapClipTolerance) {
    if (clipped != nullptr) ++*clipped;
    return 0.0;
  }
  return gap;
}

// <F(u), z - u> + g(z) - g(u) for u in dom g.
double MeritTerm(const VIProblem& problem, const Point& z, double gz,
                 const Point& u) {
  const double gu = GValue(problem.g, u);
  if (!std::isfinite(gu)) return -std::numeric_limits<double>::infinity();
  const DualVector fu = problem.oracle->Full(u);
  return fu.coords().dot(z.coords() - u.coords()) + gz - gu;
}

}  // namespace

double SimplexDualityGap(const MatrixGame& game, const Point& z,
                         int64_t* clipped) {
  if (z.x_dim() != game.cols() || z.y_dim() != game.rows()) {
    throw InvalidInputError("SimplexDualityGap: dimension mismatch");
  }
  if (!OnSimplexProduct(z)) {
    throw InvalidInputError("SimplexDualityGap: point is not on the simplex "
                            "product");
  }
  Eigen::VectorXd ax(game.rows()), aty(game.cols());
  game.Apply(z.x(), ax);
  game.ApplyTranspose(z.y(), aty);
  return ClipGap(ax.maxCoeff() - aty.minCoeff(), clipped);
}

double RestrictedGap(const VIProblem& problem, const Point& z, double radius,
                     int sample_budget) {
  const Point& z0 = problem.initial_point;
  CheckSameShape(z, z0, "RestrictedGap");
  const double gz = GValue(problem.g, z);
  if (!std::isfinite(gz)) return std::numeric_limits<double>::infinity();
  const double r2 = radius * radius;
  double best = -std::numeric_limits<double>::infinity();
  auto consider = [&](const Point& u) {
    if (SquaredDistance(u, z0) > r2 * (1.0 + 1e-12)) return;
    best = std::max(best, MeritTerm(problem, z, gz, u));
  };

  consider(z0);
  if (sample_budget > 0) {
    consider(z);
    if (problem.known_solution) consider(*problem.known_solution);

    const Eigen::Index n = z.x_dim(), m = z.y_dim();
    if (std::holds_alternative<SimplexIndicator>(problem.g) &&
        n * m <= sample_budget) {
      Point u(n, m);
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) {
          u.SetZero();
          u.x()[j] = 1.0;
          u.y()[i] = 1.0;
          consider(u);
        }
      }
    }

    // Fixed pool: directions and geometric scales drawn from a fixed seed,
    // independent of z and of the radius.
    Rng rng(0x5eedf00dULL);
    Point u = z0;
    for (int k = 0; k < sample_budget; ++k) {
      Eigen::VectorXd d(z0.dim());
      for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = rng.StandardNormal();
      d.normalize();
      const double scale = std::pow(10.0, -3.0 + 6.0 * rng.Uniform());
      u.coords() = z0.coords() + scale * d;
      consider(ProjectOntoDomain(problem.g, u));
    }
  }
  return std::max(best, 0.0);
}

double NaturalResidual(const VIProblem& problem, const Point& z) {
  const DualVector fz = problem.oracle->Full(z);
  Point step(z.coords() - fz.coords(), z.x_dim());
  ProxStep(problem.g, step, 1.0, step);
  return (z.coords() - step.coords()).norm();
}

double EvaluateGap(const VIProblem& problem, const Point& z,
                   int64_t* clipped) {
  switch (problem.gap_kind) {
    case GapKind::kSimplexDuality:
      if (problem.matrix == nullptr) {
        throw ConfigError("simplex duality gap needs a matrix game");
      }
      return SimplexDualityGap(*problem.matrix, z, clipped);
    case GapKind::kRestrictedMerit:
      return RestrictedGap(problem, z, problem.restricted_radius);
    case GapKind::kNaturalResidual:
      return NaturalResidual(problem, z);
  }
  return 0.0;
}

double LyapunovPhi(LyapunovKind kind, const SolverState& state,
                   const VIProblem& problem, const Point& z_star) {
  const auto& prm = state.params;
  double phi = prm.alpha * SquaredDistance(state.z, z_star) +
               (1.0 - prm.alpha) / prm.p * SquaredDistance(state.w, z_star);
  if (kind == LyapunovKind::kForb) {
    const DualVector fz = problem.oracle->Full(state.z);
    const DualVector fw = problem.oracle->Full(state.w_prev);
    phi += 2.0 * prm.tau *
           (fz.coords() - fw.coords())
               .dot(z_star.coords() - state.z.coords());
    phi += (1.0 - prm.alpha) * SquaredDistance(state.z, state.w_prev);
  }
  return phi;
}

}  // namespace vrvi
