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


#ifndef VRVI_GEOMETRY_H_
#define VRVI_GEOMETRY_H_

#include <Eigen/Core>

#include "vrvi/point.h"

namespace vrvi {

enum class GeometryKind { kEuclidean, kEntropicSimplex };

// Bregman structure on Z = R^n x R^m. For kEntropicSimplex both blocks live on
// probability simplices and h is the negative entropy summed over blocks.
struct Geometry {
  GeometryKind kind = GeometryKind::kEuclidean;
  Eigen::Index n = 0;
  Eigen::Index m = 0;

  static Geometry Euclidean(Eigen::Index n, Eigen::Index m) {
    return {GeometryKind::kEuclidean, n, m};
  }
  static Geometry EntropicSimplex(Eigen::Index n, Eigen::Index m) {
    return {GeometryKind::kEntropicSimplex, n, m};
  }
};

const char* GeometryName(GeometryKind kind);

// Tolerance on |sum - 1| for a block to count as lying on the simplex.
inline constexpr double kSimplexSumTolerance = 1e-9;

// Returns true if every block of z is a probability vector up to
// kSimplexSumTolerance.
bool OnSimplexProduct(const Point& z, double tol = kSimplexSumTolerance);

// Validates z as a simplex-product point and returns a copy whose blocks are
// renormalized to sum exactly to one. Throws InvalidInputError on negative
// coordinates or sums off by more than kSimplexSumTolerance.
Point NormalizeOnSimplexProduct(const Point& z);

// D(u, v). Euclidean: 0.5 * |u - v|^2. Entropic: sum_i u_i log(u_i / v_i) with
// 0 log 0 = 0; returns +infinity when some u_i > 0 meets v_i = 0.
double BregmanDivergence(const Geometry& geom, const Point& u, const Point& v);

// h(z): 0.5 |z|^2 or sum_i z_i log z_i.
double MirrorPotential(const Geometry& geom, const Point& z);

// grad h(z). Entropic: log z (coordinates must be strictly positive).
DualVector MirrorMap(const Geometry& geom, const Point& z);

// grad h^*(dual). Entropic: per-block softmax with max subtraction. The
// result satisfies MirrorMap(result) == dual up to a per-block constant.
Point InverseMirrorMap(const Geometry& geom, const DualVector& dual);

// Writes the per-block softmax of `dual` into `primal` and shifts `dual` by
// its per-block log-sum-exp so that afterwards dual == log(primal).
void SoftmaxInPlace(DualVector& dual, Point& primal);

// Primal norm |z| and its dual |s|_*. Euclidean: l2. Entropic pairing:
// sqrt(|x|_1^2 + |y|_1^2) and sqrt(|x|_inf^2 + |y|_inf^2).
double PrimalNorm(const Geometry& geom, const Point& z);
double DualNorm(const Geometry& geom, const DualVector& s);

}  // namespace vrvi

#endif  // VRVI_GEOMETRY_H_
