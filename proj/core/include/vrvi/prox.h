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


#ifndef VRVI_PROX_H_
#define VRVI_PROX_H_

#include <variant>

#include <Eigen/Core>

#include "vrvi/geometry.h"
#include "vrvi/point.h"

namespace vrvi {

// Convex functions of x alone, used as the f in f(x) + <b, y>.
struct ZeroFunction {};
// (weight / 2) |x - center|^2.
struct SquaredDistanceFunction {
  double weight = 1.0;
  Eigen::VectorXd center;
};
// weight * |x|_1.
struct L1NormFunction {
  double weight = 1.0;
};
using PrimalFunction =
    std::variant<ZeroFunction, SquaredDistanceFunction, L1NormFunction>;

// g == 0.
struct Unconstrained {};
// Indicator of the product of the two probability simplices.
struct SimplexIndicator {};
// g(x, y) = f(x) + <b, y>, y unconstrained.
struct LinearConstraintTerm {
  PrimalFunction f;
  Eigen::VectorXd b;
};
// g(z) = (mu / 2) |z - center|^2 with mu > 0.
struct StronglyConvexQuadratic {
  double mu = 1.0;
  Point center;
};
// Indicator of {lower <= x <= upper} x R_+^m. Infinite bounds are allowed.
struct BoxNonneg {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

using ProxFriendlyG = std::variant<Unconstrained, SimplexIndicator,
                                   LinearConstraintTerm,
                                   StronglyConvexQuadratic, BoxNonneg>;

const char* ProxName(const ProxFriendlyG& g);

// Throws InvalidInputError if g's parameters are inconsistent with the block
// sizes (n, m) or violate their own invariants (mu <= 0, lower > upper).
void ValidateProx(const ProxFriendlyG& g, Eigen::Index n, Eigen::Index m);

// out = prox_{tau g}(anchor). `out` may alias `anchor`.
void ProxStep(const ProxFriendlyG& g, const Point& anchor, double tau,
              Point& out);
Point ProxStep(const ProxFriendlyG& g, const Point& anchor, double tau);

// g(z); +infinity outside dom g (indicators use a 1e-9 feasibility slack).
double GValue(const ProxFriendlyG& g, const Point& z);

// Projection of z onto dom g (identity where dom g is everything).
Point ProjectOntoDomain(const ProxFriendlyG& g, const Point& z);

// Solves argmin_z { g(z) + <linear_term, z> + (alpha/tau) D(z, z1)
//                   + ((1-alpha)/tau) D(z, z2) }.
// Anchors are passed through their mirror images grad h(z1), grad h(z2); for
// the Euclidean geometry those are the points themselves. Writes the
// minimizer to `primal` and grad h(minimizer) to `dual`. Entropic geometry
// requires g to be SimplexIndicator. Throws NumericError on non-finite output.
void MirrorArgmin(const Geometry& geom, const ProxFriendlyG& g,
                  const DualVector& linear_term, double alpha, double tau,
                  const DualVector& z1_dual, const DualVector& z2_dual,
                  Point& primal, DualVector& dual);

}  // namespace vrvi

#endif  // VRVI_PROX_H_
