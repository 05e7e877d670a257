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


#include "vrvi/solvers.h"

#include <string>

#include "vrvi/errors.h"
#include "vrvi/geometry.h"
#include "vrvi/prox.h"

namespace vrvi {
namespace {

void EvaluateFull(SolverState& s, const VIProblem& problem, const Point& z,
                  DualVector& out) {
  problem.oracle->Full(z, out);
  s.cost += problem.oracle->full_cost();
  ++s.full_evaluations;
}

// fhat = F(w) + F_xi(u) - F_xi(w). For an exact oracle F_xi = F, so the
// estimate collapses to F(u) and is evaluated directly: one full pass, and
// bit-identical to the deterministic method.
void VarianceReducedEstimate(SolverState& s, const VIProblem& problem,
                             const ComponentIndex& idx, const Point& u,
                             const Point& anchor, const DualVector& f_anchor) {
  const StochasticOracle& oracle = *problem.oracle;
  if (oracle.is_exact()) {
    EvaluateFull(s, problem, u, s.fhat);
    return;
  }
  s.fhat = f_anchor;
  oracle.AddComponentDifference(idx, u, anchor, 1.0, s.fhat);
  s.cost += 2.0 * oracle.sample_cost();
  s.component_evaluations += 2;
}

void SnapshotCoin(SolverState& s, const VIProblem& problem,
                  DrawSource& draws) {
  if (draws.Coin(s.params.p)) {
    s.w = s.z;
    EvaluateFull(s, problem, s.w, s.fw);
    ++s.snapshot_updates;
  }
}

void CheckFinite(const Point& z, const char* where) {
  if (!z.AllFinite()) {
    throw NumericError(std::string(where) + ": iterate is not finite");
  }
}

void RequireAlgorithm(const SolverState& s, Algorithm a) {
  if (s.params.algorithm != a) {
    throw ConfigError(std::string("state was initialized for ") +
                      AlgorithmName(s.params.algorithm) + ", stepping " +
                      AlgorithmName(a));
  }
}

}  // namespace

void KahanSum::Add(const Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double y = v[i] - comp_[i];
    const double t = sum_[i] + y;
    comp_[i] = (t - sum_[i]) - y;
    sum_[i] = t;
  }
  ++count_;
}

Eigen::VectorXd KahanSum::Mean() const {
  return sum_ / static_cast<double>(count_);
}

SolverState InitState(const VIProblem& problem,
                      const ResolvedParameters& params) {
  problem.Validate();
  SolverState s;
  s.params = params;
  const Geometry& geom = problem.geometry;
  s.z = geom.kind == GeometryKind::kEntropicSimplex
            ? NormalizeOnSimplexProduct(problem.initial_point)
            : problem.initial_point;
  s.z_dual = MirrorMap(geom, s.z);
  s.w = s.z;
  s.w_prev = s.z;
  s.wbar_dual = s.z_dual;
  const Eigen::Index dim = s.z.dim();
  s.mp_primal_sum.Reset(dim);
  s.mp_dual_sum.Reset(dim);
  s.average.Reset(dim);
  s.fw = DualVector(s.z.x_dim(), s.z.y_dim());
  s.fhat = s.fw;
  s.z_half = s.z;
  s.z_half_dual = s.z_dual;
  s.z_next = s.z;
  s.z_next_dual = s.z_dual;
  EvaluateFull(s, problem, s.w, s.fw);
  return s;
}

void StepVrEg(SolverState& s, const VIProblem& problem, DrawSource& draws) {
  RequireAlgorithm(s, Algorithm::kVrEg);
  const auto& prm = s.params;
  // z_half = prox(zbar - tau F(w)), zbar = alpha z + (1 - alpha) w.
  MirrorArgmin(problem.geometry, problem.g, s.fw, prm.alpha, prm.tau, s.z,
               s.w, s.z_half, s.z_half_dual);
  ++s.prox_calls;
  const SamplingPlan plan =
      problem.oracle->Plan(&s.z_half, &s.w, s.plan_scratch);
  const ComponentIndex idx = draws.DrawIndex(plan);
  VarianceReducedEstimate(s, problem, idx, s.z_half, s.w, s.fw);
  MirrorArgmin(problem.geometry, problem.g, s.fhat, prm.alpha, prm.tau, s.z,
               s.w, s.z_next, s.z_next_dual);
  ++s.prox_calls;
  s.average.Add(s.z_half.coords());
  std::swap(s.z, s.z_next);
  s.z_dual = s.z;
  SnapshotCoin(s, problem, draws);
  ++s.iterations;
}

void StepVrFbf(SolverState& s, const VIProblem& problem, DrawSource& draws) {
  RequireAlgorithm(s, Algorithm::kVrFbf);
  const auto& prm = s.params;
  MirrorArgmin(problem.geometry, problem.g, s.fw, prm.alpha, prm.tau, s.z,
               s.w, s.z_half, s.z_half_dual);
  ++s.prox_calls;
  const SamplingPlan plan =
      problem.oracle->Plan(&s.z_half, &s.w, s.plan_scratch);
  const ComponentIndex idx = draws.DrawIndex(plan);
  // z+ = z_half - tau (F_xi(z_half) - F_xi(w)); no second resolvent.
  const StochasticOracle& oracle = *problem.oracle;
  if (oracle.is_exact()) {
    EvaluateFull(s, problem, s.z_half, s.fhat);
    s.fhat.coords() -= s.fw.coords();
  } else {
    s.fhat.SetZero();
    oracle.AddComponentDifference(idx, s.z_half, s.w, 1.0, s.fhat);
    s.cost += 2.0 * oracle.sample_cost();
    s.component_evaluations += 2;
  }
  s.z_next.coords() = s.z_half.coords() - prm.tau * s.fhat.coords();
  CheckFinite(s.z_next, "vr-fbf");
  s.average.Add(s.z_half.coords());
  std::swap(s.z, s.z_next);
  s.z_dual = s.z;
  SnapshotCoin(s, problem, draws);
  ++s.iterations;
}

void StepVrForb(SolverState& s, const VIProblem& problem, DrawSource& draws) {
  RequireAlgorithm(s, Algorithm::kVrForb);
  const auto& prm = s.params;
  s.average.Add(s.z.coords());
  const SamplingPlan plan =
      problem.oracle->Plan(&s.z, &s.w_prev, s.plan_scratch);
  const ComponentIndex idx = draws.DrawIndex(plan);
  // fhat = F(w_k) + F_xi(z_k) - F_xi(w_{k-1}).
  const StochasticOracle& oracle = *problem.oracle;
  s.fhat = s.fw;
  oracle.AddComponentDifference(idx, s.z, s.w_prev, 1.0, s.fhat);
  s.cost += 2.0 * oracle.sample_cost();
  s.component_evaluations += 2;
  MirrorArgmin(problem.geometry, problem.g, s.fhat, prm.alpha, prm.tau, s.z,
               s.w, s.z_next, s.z_next_dual);
  ++s.prox_calls;
  s.w_prev = s.w;
  std::swap(s.z, s.z_next);
  s.z_dual = s.z;
  SnapshotCoin(s, problem, draws);
  ++s.iterations;
}

void StepVrMp(SolverState& s, const VIProblem& problem, DrawSource& draws) {
  RequireAlgorithm(s, Algorithm::kVrMp);
  const auto& prm = s.params;
  MirrorArgmin(problem.geometry, problem.g, s.fw, prm.alpha, prm.tau,
               s.z_dual, s.wbar_dual, s.z_half, s.z_half_dual);
  ++s.prox_calls;
  const SamplingPlan plan =
      problem.oracle->Plan(&s.z_half, &s.w, s.plan_scratch);
  const ComponentIndex idx = draws.DrawIndex(plan);
  VarianceReducedEstimate(s, problem, idx, s.z_half, s.w, s.fw);
  MirrorArgmin(problem.geometry, problem.g, s.fhat, prm.alpha, prm.tau,
               s.z_dual, s.wbar_dual, s.z_next, s.z_next_dual);
  ++s.prox_calls;
  s.average.Add(s.z_half.coords());
  std::swap(s.z, s.z_next);
  std::swap(s.z_dual, s.z_next_dual);
  s.mp_primal_sum.Add(s.z.coords());
  s.mp_dual_sum.Add(s.z_dual.coords());
  ++s.iterations;
  if (++s.inner_k < prm.inner_loop_length) return;

  // Outer update: w = mean of z_k, grad h(wbar) = mean of grad h(z_k),
  // and the next inner loop starts from z_K (already in s.z).
  s.w.coords() = s.mp_primal_sum.Mean();
  s.wbar_dual.coords() = s.mp_dual_sum.Mean();
  EvaluateFull(s, problem, s.w, s.fw);
  ++s.snapshot_updates;
  s.mp_primal_sum.Reset(s.z.dim());
  s.mp_dual_sum.Reset(s.z.dim());
  s.inner_k = 0;
  ++s.outer_s;
}

void StepDetEg(SolverState& s, const VIProblem& problem) {
  RequireAlgorithm(s, Algorithm::kDetEg);
  const double tau = s.params.tau;
  // fw caches F(z_k); anchors are z_k with weight one.
  MirrorArgmin(problem.geometry, problem.g, s.fw, 1.0, tau, s.z_dual,
               s.z_dual, s.z_half, s.z_half_dual);
  ++s.prox_calls;
  EvaluateFull(s, problem, s.z_half, s.fhat);
  MirrorArgmin(problem.geometry, problem.g, s.fhat, 1.0, tau, s.z_dual,
               s.z_dual, s.z_next, s.z_next_dual);
  ++s.prox_calls;
  s.average.Add(s.z_half.coords());
  std::swap(s.z, s.z_next);
  std::swap(s.z_dual, s.z_next_dual);
  s.w = s.z;
  EvaluateFull(s, problem, s.w, s.fw);
  ++s.iterations;
}

void Step(SolverState& s, const VIProblem& problem, DrawSource& draws) {
  switch (s.params.algorithm) {
    case Algorithm::kVrEg:
      return StepVrEg(s, problem, draws);
    case Algorithm::kVrMp:
      return StepVrMp(s, problem, draws);
    case Algorithm::kVrFbf:
      return StepVrFbf(s, problem, draws);
    case Algorithm::kVrForb:
      return StepVrForb(s, problem, draws);
    case Algorithm::kDetEg:
      return StepDetEg(s, problem);
  }
}

Point AveragedIterate(const SolverState& s, const VIProblem& problem) {
  if (s.average.count() == 0) return problem.initial_point;
  return Point(s.average.Mean(), s.z.x_dim());
}

}  // namespace vrvi
