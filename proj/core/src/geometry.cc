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


#include "vrvi/geometry.h"

#include <cmath>
#include <limits>
#include <string>

#include "vrvi/errors.h"

namespace vrvi {
namespace {

void CheckShape(const Geometry& geom, const Point& z, const char* what) {
  if (geom.n > 0 && (z.x_dim() != geom.n || z.y_dim() != geom.m)) {
    throw InvalidInputError(std::string(what) +
                            ": point shape does not match geometry");
  }
}

template <typename Block>
void ValidateBlock(const Block& b, const char* what) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    if (!(b[i] >= 0.0) || !std::isfinite(b[i])) {
      throw InvalidInputError(std::string(what) +
                              ": negative or non-finite simplex coordinate");
    }
    sum += b[i];
  }
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    throw InvalidInputError(std::string(what) + ": simplex block sums to " +
                            std::to_string(sum));
  }
}

template <typename Block>
double KlBlock(const Block& u, const Block& v, double su, double sv) {
  double d = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double ui = u[i] / su;
    if (ui == 0.0) continue;
    const double vi = v[i] / sv;
    if (vi == 0.0) return std::numeric_limits<double>::infinity();
    d += ui * std::log(ui / vi);
  }
  // Rounding can push tiny divergences slightly below zero.
  return d < 0.0 ? 0.0 : d;
}

template <typename Block>
void SoftmaxBlock(Block dual, Block primal) {
  const double mx = dual.maxCoeff();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dual.size(); ++i) {
    primal[i] = std::exp(dual[i] - mx);
    sum += primal[i];
  }
  primal /= sum;
  dual.array() -= mx + std::log(sum);
}

}  // namespace

const char* GeometryName(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::kEuclidean:
      return "euclidean";
    case GeometryKind::kEntropicSimplex:
      return "entropic";
  }
  return "unknown";
}

bool OnSimplexProduct(const Point& z, double tol) {
  auto ok = [tol](const auto& b) {
    return (b.array() >= 0.0).all() && std::abs(b.sum() - 1.0) <= tol;
  };
  return z.AllFinite() && ok(z.x()) && ok(z.y());
}

Point NormalizeOnSimplexProduct(const Point& z) {
  ValidateBlock(z.x(), "x block");
  ValidateBlock(z.y(), "y block");
  Point out = z;
  out.x() /= out.x().sum();
  out.y() /= out.y().sum();
  return out;
}

double BregmanDivergence(const Geometry& geom, const Point& u, const Point& v) {
  CheckSameShape(u, v, "BregmanDivergence");
  CheckShape(geom, u, "BregmanDivergence");
  if (geom.kind == GeometryKind::kEuclidean) {
    return 0.5 * SquaredDistance(u, v);
  }
  ValidateBlock(u.x(), "u.x");
  ValidateBlock(u.y(), "u.y");
  ValidateBlock(v.x(), "v.x");
  ValidateBlock(v.y(), "v.y");
  return KlBlock(u.x(), v.x(), u.x().sum(), v.x().sum()) +
         KlBlock(u.y(), v.y(), u.y().sum(), v.y().sum());
}

double MirrorPotential(const Geometry& geom, const Point& z) {
  if (geom.kind == GeometryKind::kEuclidean) {
    return 0.5 * z.coords().squaredNorm();
  }
  double h = 0.0;
  for (double zi : z.coords()) {
    if (zi < 0.0) throw InvalidInputError("MirrorPotential: negative entry");
    if (zi > 0.0) h += zi * std::log(zi);
  }
  return h;
}

DualVector MirrorMap(const Geometry& geom, const Point& z) {
  if (geom.kind == GeometryKind::kEuclidean) return z;
  DualVector d = z;
  for (double& v : d.coords()) {
    if (!(v > 0.0)) {
      throw InvalidInputError(
          "MirrorMap: entropic mirror map needs strictly positive entries");
    }
    v = std::log(v);
  }
  return d;
}

Point InverseMirrorMap(const Geometry& geom, const DualVector& dual) {
  if (geom.kind == GeometryKind::kEuclidean) return dual;
  DualVector d = dual;
  Point p(dual.x_dim(), dual.y_dim());
  SoftmaxInPlace(d, p);
  return p;
}

void SoftmaxInPlace(DualVector& dual, Point& primal) {
  if (!dual.AllFinite()) {
    throw NumericError("non-finite dual coordinates in entropic update");
  }
  SoftmaxBlock(dual.x(), primal.x());
  SoftmaxBlock(dual.y(), primal.y());
}

double PrimalNorm(const Geometry& geom, const Point& z) {
  if (geom.kind == GeometryKind::kEuclidean) return z.coords().norm();
  return std::hypot(z.x().lpNorm<1>(), z.y().lpNorm<1>());
}

double DualNorm(const Geometry& geom, const DualVector& s) {
  if (geom.kind == GeometryKind::kEuclidean) return s.coords().norm();
  return std::hypot(s.x().lpNorm<Eigen::Infinity>(),
                    s.y().lpNorm<Eigen::Infinity>());
}

}  // namespace vrvi
