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


#include "vrvi/oracle_checks.h"

#include <string>

#include "vrvi/errors.h"
#include "vrvi/geometry.h"

namespace vrvi {
namespace {

void CheckSupport(const SamplingPlan& plan, size_t max_support) {
  if (plan.support_size() > max_support) {
    throw InvalidInputError("support of size " +
                            std::to_string(plan.support_size()) +
                            " exceeds the enumeration bound " +
                            std::to_string(max_support));
  }
}

Geometry NormGeometry(const StochasticOracle& oracle) {
  return {oracle.norms() == NormPairing::kEntropicL1
              ? GeometryKind::kEntropicSimplex
              : GeometryKind::kEuclidean,
          oracle.x_dim(), oracle.y_dim()};
}

}  // namespace

double UnbiasednessDeviation(const StochasticOracle& oracle, const Point& z,
                             const Point* u, const Point* v,
                             size_t max_support) {
  PlanScratch scratch;
  const SamplingPlan plan = oracle.Plan(u, v, scratch);
  CheckSupport(plan, max_support);
  DualVector mean(oracle.x_dim(), oracle.y_dim());
  DualVector f(oracle.x_dim(), oracle.y_dim());
  for (size_t k = 0; k < plan.support_size(); ++k) {
    const double q = plan.probability(k);
    if (q == 0.0) continue;
    oracle.Component(plan.component(k), z, f);
    mean.coords() += q * f.coords();
  }
  return (mean.coords() - oracle.Full(z).coords()).lpNorm<Eigen::Infinity>();
}

double DifferenceUnbiasednessDeviation(const StochasticOracle& oracle,
                                       const Point& u, const Point& v,
                                       size_t max_support) {
  PlanScratch scratch;
  const SamplingPlan plan = oracle.Plan(&u, &v, scratch);
  CheckSupport(plan, max_support);
  DualVector mean(oracle.x_dim(), oracle.y_dim());
  for (size_t k = 0; k < plan.support_size(); ++k) {
    const double q = plan.probability(k);
    if (q == 0.0) continue;
    oracle.AddComponentDifference(plan.component(k), u, v, q, mean);
  }
  const Eigen::VectorXd exact =
      oracle.Full(u).coords() - oracle.Full(v).coords();
  return (mean.coords() - exact).lpNorm<Eigen::Infinity>();
}

MeanLipschitzCheck VerifyMeanLipschitz(const StochasticOracle& oracle,
                                       const Point& u, const Point& v,
                                       size_t max_support) {
  PlanScratch scratch;
  const SamplingPlan plan = oracle.Plan(&u, &v, scratch);
  CheckSupport(plan, max_support);
  const Geometry geom = NormGeometry(oracle);
  MeanLipschitzCheck out;
  DualVector d(oracle.x_dim(), oracle.y_dim());
  for (size_t k = 0; k < plan.support_size(); ++k) {
    const double q = plan.probability(k);
    if (q == 0.0) continue;
    d.SetZero();
    oracle.AddComponentDifference(plan.component(k), u, v, 1.0, d);
    const double nd = DualNorm(geom, d);
    out.lhs += q * nd * nd;
  }
  Point diff(u.coords() - v.coords(), u.x_dim());
  const double np = PrimalNorm(geom, diff);
  out.rhs = oracle.lipschitz() * oracle.lipschitz() * np * np;
  return out;
}

}  // namespace vrvi
