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


#ifndef VRVI_SOLVERS_H_
#define VRVI_SOLVERS_H_

#include <cstdint>

#include <Eigen/Core>

#include "vrvi/oracle.h"
#include "vrvi/point.h"
#include "vrvi/problems.h"
#include "vrvi/solver_config.h"

namespace vrvi {

// Compensated running sum of vectors.
class KahanSum {
 public:
  void Reset(Eigen::Index dim) {
    sum_ = Eigen::VectorXd::Zero(dim);
    comp_ = Eigen::VectorXd::Zero(dim);
    count_ = 0;
  }
  void Add(const Eigen::VectorXd& v);
  int64_t count() const { return count_; }
  const Eigen::VectorXd& sum() const { return sum_; }
  Eigen::VectorXd Mean() const;

 private:
  Eigen::VectorXd sum_;
  Eigen::VectorXd comp_;
  int64_t count_ = 0;
};

// Everything one run of a stepper carries between iterations.
struct SolverState {
  ResolvedParameters params;

  Point z;          // current iterate z_k
  DualVector z_dual;  // grad h(z_k); equals z in the Euclidean geometry
  Point w;          // snapshot w_k (w^s for the double loop)
  DualVector fw;    // cached F(w), refreshed exactly when w changes
  DualVector wbar_dual;  // grad h(wbar^s), double loop only
  Point w_prev;     // w_{k-1}, forward-reflected-backward only

  int64_t inner_k = 0;  // double loop inner counter
  int64_t outer_s = 0;  // double loop outer counter
  KahanSum mp_primal_sum;
  KahanSum mp_dual_sum;

  // Running sum of the averaged iterate: z_{k+1/2} for VrEg, VrFbf, VrMp and
  // DetEg; z_k for VrForb.
  KahanSum average;

  double cost = 0.0;  // cumulative oracle cost
  int64_t iterations = 0;
  int64_t prox_calls = 0;
  int64_t full_evaluations = 0;
  int64_t component_evaluations = 0;
  int64_t snapshot_updates = 0;

  // Last half step (kept for inspection by tests).
  Point z_half;
  DualVector z_half_dual;

  // Scratch.
  DualVector fhat;
  Point z_next;
  DualVector z_next_dual;
  PlanScratch plan_scratch;
};

// Validates the problem/parameter pair, sets z0 = w0 = w_{-1} = problem's
// initial point (projected onto the simplex product for the entropic
// geometry), wbar^0 = z0, and evaluates F(w0), charging one full pass.
SolverState InitState(const VIProblem& problem,
                      const ResolvedParameters& params);

// One iteration of each method. Randomness is taken from `draws` in the
// fixed order: component index, then snapshot coin.
void StepVrEg(SolverState& state, const VIProblem& problem, DrawSource& draws);
void StepVrMp(SolverState& state, const VIProblem& problem, DrawSource& draws);
void StepVrFbf(SolverState& state, const VIProblem& problem,
               DrawSource& draws);
void StepVrForb(SolverState& state, const VIProblem& problem,
                DrawSource& draws);
void StepDetEg(SolverState& state, const VIProblem& problem);

// Dispatches on state.params.algorithm.
void Step(SolverState& state, const VIProblem& problem, DrawSource& draws);

// The averaged iterate, or z0 if nothing was averaged yet.
Point AveragedIterate(const SolverState& state, const VIProblem& problem);

}  // namespace vrvi

#endif  // VRVI_SOLVERS_H_
