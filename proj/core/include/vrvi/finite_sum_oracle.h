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


#ifndef VRVI_FINITE_SUM_ORACLE_H_
#define VRVI_FINITE_SUM_ORACLE_H_

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vrvi/oracle.h"
#include "vrvi/sampler.h"

namespace vrvi {

// One summand F_i of F = sum_i F_i. `apply(z, out)` must overwrite `out`
// with F_i(z); it is always called with `out` already shaped like z.
// `lipschitz` is a caller-supplied Lipschitz bound L_i; it is
// trusted, not estimated.
struct OperatorComponent {
  std::function<void(const Point&, DualVector&)> apply;
  double lipschitz = 0.0;
};

// F_i(z) = M z + c. The Lipschitz bound is the spectral norm of M.
OperatorComponent AffineComponent(const Eigen::MatrixXd& m,
                                  const Eigen::VectorXd& c);

enum class FiniteSumSampling {
  // q_i = 1/N, F_xi = N F_i, L = sqrt(N sum L_i^2).
  kUniform,
  // q_i = L_i / sum L_j, F_xi = F_i / q_i, L = sum L_i.
  kImportance,
};

const char* FiniteSumSamplingName(FiniteSumSampling sampling);

// Costs are counted in component evaluations: F costs N, F_xi costs 1.
class FiniteSumOracle : public StochasticOracle {
 public:
  using StochasticOracle::Component;
  using StochasticOracle::Full;

  FiniteSumOracle(std::vector<OperatorComponent> components,
                  Eigen::Index x_dim, Eigen::Index y_dim,
                  FiniteSumSampling sampling);

  Eigen::Index x_dim() const override { return x_dim_; }
  Eigen::Index y_dim() const override { return y_dim_; }
  std::string name() const override;

  void Full(const Point& z, DualVector& out) const override;
  void Component(const ComponentIndex& idx, const Point& z,
                 DualVector& out) const override;
  void AddComponentDifference(const ComponentIndex& idx, const Point& u,
                              const Point& v, double scale,
                              DualVector& out) const override;
  SamplingPlan Plan(const Point*, const Point*, PlanScratch&) const override {
    return SamplingPlan(&sampler_);
  }
  double lipschitz() const override { return lipschitz_; }
  double full_cost() const override {
    return static_cast<double>(components_.size());
  }
  double sample_cost() const override { return 1.0; }

  size_t size() const { return components_.size(); }
  const DiscreteSampler& sampler() const { return sampler_; }

 private:
  std::vector<OperatorComponent> components_;
  Eigen::Index x_dim_;
  Eigen::Index y_dim_;
  FiniteSumSampling sampling_;
  DiscreteSampler sampler_;
  double lipschitz_ = 0.0;
};

}  // namespace vrvi

#endif  // VRVI_FINITE_SUM_ORACLE_H_
