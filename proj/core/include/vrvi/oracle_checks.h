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


#ifndef VRVI_ORACLE_CHECKS_H_
#define VRVI_ORACLE_CHECKS_H_

#include <cstddef>

#include "vrvi/oracle.h"
#include "vrvi/point.h"

namespace vrvi {

// Largest support the enumeration checks accept before refusing.
inline constexpr size_t kMaxEnumeratedSupport = size_t{1} << 20;

// max_k |sum_xi q_xi F_xi(z) - F(z)|_k, enumerating the distribution the
// oracle uses for anchors (u, v) (pass nullptr for the anchor-free plan).
// Throws InvalidInputError when the support exceeds `max_support`.
double UnbiasednessDeviation(const StochasticOracle& oracle, const Point& z,
                             const Point* u = nullptr, const Point* v = nullptr,
                             size_t max_support = kMaxEnumeratedSupport);

// max_k |E_{xi ~ Q_{u,v}}[F_xi(u) - F_xi(v)] - (F(u) - F(v))|_k. This is the
// unbiasedness the variance-reduced estimators rely on; for variable oracles
// it holds exactly even though F_xi(z) alone may be biased off the anchors.
double DifferenceUnbiasednessDeviation(
    const StochasticOracle& oracle, const Point& u, const Point& v,
    size_t max_support = kMaxEnumeratedSupport);

struct MeanLipschitzCheck {
  double lhs = 0.0;  // E_{xi ~ Q_{u,v}} |F_xi(u) - F_xi(v)|_*^2, exact
  double rhs = 0.0;  // L^2 |u - v|^2
};

// Norms follow oracle.norms().
MeanLipschitzCheck VerifyMeanLipschitz(
    const StochasticOracle& oracle, const Point& u, const Point& v,
    size_t max_support = kMaxEnumeratedSupport);

}  // namespace vrvi

#endif  // VRVI_ORACLE_CHECKS_H_
