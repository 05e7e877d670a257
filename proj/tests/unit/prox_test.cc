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


#include <cmath>
#include <functional>
#include <limits>

#include <gtest/gtest.h>

#include "test_util.h"
#include "vrvi/errors.h"
#include "vrvi/geometry.h"
#include "vrvi/prox.h"

namespace vrvi {
namespace {

using testing::MaxAbsDiff;
using testing::RandomPoint;

// argmin over [lo, hi] of a convex 1-D function.
double TernaryMin(const std::function<double(double)>& f, double lo, double hi) {
  for (int it = 0; it < 300; ++it) {
    const double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
    if (f(a) <= f(b)) hi = b; else lo = a;
  }
  return 0.5 * (lo + hi);
}

// Coordinate-wise oracle for separable g: minimizes
// g_i(t) + (t - a_i)^2 / (2 tau) over [lo_i, hi_i].
Point SeparableProx(const Point& a, double tau,
                    const std::function<double(Eigen::Index, double)>& gi,
                    const std::function<std::pair<double, double>(Eigen::Index)>& range) {
  Point out = a;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const double ai = a.coords()[i];
    auto [lo, hi] = range(i);
    out.coords()[i] = TernaryMin(
        [&](double t) { return gi(i, t) + (t - ai) * (t - ai) / (2 * tau); },
        lo, hi);
  }
  return out;
}

const auto kWide = [](Eigen::Index) { return std::make_pair(-50.0, 50.0); };

// Comparing function values pins the argmin only to about sqrt(eps) of the
// objective's scale, so the oracle is trusted to this level.
constexpr double kOracleTol = 1e-6;

TEST(Prox, SimplexFeasibleAnchorUnchanged) {
  const Point z = Point::FromBlocks(Eigen::Vector3d(0.2, 0.3, 0.5), Eigen::Vector2d(1, 0));
  EXPECT_LE(MaxAbsDiff(ProxStep(SimplexIndicator{}, z, 0.7), z), 1e-16);
}

TEST(Prox, SimplexTwoBlockProjection) {
  const Point z = Point::FromBlocks(Eigen::Vector2d(2, 0), Eigen::Vector2d(0.5, 0.5));
  const Point p = ProxStep(SimplexIndicator{}, z, 1.0);
  EXPECT_DOUBLE_EQ(p.x()[0], 1.0);
  EXPECT_DOUBLE_EQ(p.x()[1], 0.0);
}

TEST(Prox, QuadraticHalvesAnchor) {
  Rng rng(1);
  const Point a = RandomPoint(rng, 3, 2);
  const Point p = ProxStep(StronglyConvexQuadratic{1.0, Point(3, 2)}, a, 1.0);
  EXPECT_LE((p.coords() - 0.5 * a.coords()).lpNorm<Eigen::Infinity>(), 1e-16);
}

TEST(Prox, RejectsNonPositiveStep) {
  EXPECT_THROW(ProxStep(Unconstrained{}, Point(1, 1), 0.0), InvalidInputError);
}

TEST(Prox, OutputMayAliasAnchor) {
  Point z = Point::FromBlocks(Eigen::Vector2d(3, -1), Eigen::Vector2d(-2, 0.5));
  const Point expect = ProxStep(SimplexIndicator{}, z, 1.0);
  ProxStep(SimplexIndicator{}, z, 1.0, z);
  EXPECT_LE(MaxAbsDiff(z, expect), 0.0);
}

TEST(Prox, ValidateRejectsBadPieces) {
  EXPECT_THROW(ValidateProx(LinearConstraintTerm{ZeroFunction{}, Eigen::Vector3d::Zero()}, 2, 2),
               InvalidInputError);
  EXPECT_THROW(ValidateProx(StronglyConvexQuadratic{-1.0, Point(2, 2)}, 2, 2),
               InvalidInputError);
  EXPECT_THROW(ValidateProx(BoxNonneg{Eigen::Vector2d(1, 1), Eigen::Vector2d(0, 2)}, 2, 2),
               InvalidInputError);
}

TEST(Prox, PropertySeparableMatchesTernaryOracle) {
  Rng rng(2);
  const Eigen::Index n = 3, m = 2;
  const Eigen::VectorXd center = testing::RandomVector(rng, n);
  const Eigen::VectorXd b = testing::RandomVector(rng, m);
  const Point qc = RandomPoint(rng, n, m);
  const Eigen::Vector3d lower(-1, 0, 0.5), upper(1, 0, 3);
  for (int t = 0; t < 100; ++t) {
    const double tau = std::exp(rng.Uniform() * 3 - 1.5);
    const Point a = RandomPoint(rng, n, m, 3.0);
    // |x|_1 weight 0.4, <b, y>
    {
      const ProxFriendlyG g = LinearConstraintTerm{L1NormFunction{0.4}, b};
      const Point expect = SeparableProx(
          a, tau,
          [&](Eigen::Index i, double v) {
            return i < n ? 0.4 * std::abs(v) : b[i - n] * v;
          },
          kWide);
      EXPECT_LE(MaxAbsDiff(ProxStep(g, a, tau), expect), kOracleTol);
    }
    // 0.7/2 |x - c|^2, <b, y>
    {
      const ProxFriendlyG g =
          LinearConstraintTerm{SquaredDistanceFunction{0.7, center}, b};
      const Point expect = SeparableProx(
          a, tau,
          [&](Eigen::Index i, double v) {
            return i < n ? 0.35 * (v - center[i]) * (v - center[i]) : b[i - n] * v;
          },
          kWide);
      EXPECT_LE(MaxAbsDiff(ProxStep(g, a, tau), expect), kOracleTol);
    }
    // mu/2 |z - c|^2
    {
      const ProxFriendlyG g = StronglyConvexQuadratic{1.3, qc};
      const Point expect = SeparableProx(
          a, tau,
          [&](Eigen::Index i, double v) {
            const double d = v - qc.coords()[i];
            return 0.65 * d * d;
          },
          kWide);
      EXPECT_LE(MaxAbsDiff(ProxStep(g, a, tau), expect), kOracleTol);
    }
    // box on x, y >= 0
    {
      const ProxFriendlyG g = BoxNonneg{lower, upper};
      const Point expect = SeparableProx(
          a, tau, [](Eigen::Index, double) { return 0.0; },
          [&](Eigen::Index i) {
            return i < n ? std::make_pair(lower[i], upper[i])
                         : std::make_pair(0.0, 50.0);
          });
      EXPECT_LE(MaxAbsDiff(ProxStep(g, a, tau), expect), kOracleTol);
    }
  }
}

TEST(Prox, PropertyFirmlyNonexpansive) {
  Rng rng(3);
  const std::vector<ProxFriendlyG> gs = {
      Unconstrained{}, SimplexIndicator{},
      LinearConstraintTerm{L1NormFunction{0.5}, Eigen::Vector2d(1, -1)},
      StronglyConvexQuadratic{2.0, Point(3, 2)},
      BoxNonneg{Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(1, 1, 1)}};
  for (const auto& g : gs) {
    for (int t = 0; t < 100; ++t) {
      const Point x = RandomPoint(rng, 3, 2, 2.0), y = RandomPoint(rng, 3, 2, 2.0);
      const Point px = ProxStep(g, x, 0.8), py = ProxStep(g, y, 0.8);
      const Eigen::VectorXd dp = px.coords() - py.coords();
      EXPECT_LE(dp.squaredNorm(), dp.dot(x.coords() - y.coords()) + 1e-12)
          << ProxName(g);
    }
  }
}

TEST(Prox, GValueOutsideDomainIsInfinite) {
  const Point z = Point::FromBlocks(Eigen::Vector2d(0.5, 0.6), Eigen::Vector2d(1, 0));
  EXPECT_TRUE(std::isinf(GValue(SimplexIndicator{}, z)));
  EXPECT_EQ(GValue(SimplexIndicator{}, ProjectOntoDomain(SimplexIndicator{}, z)), 0.0);
}

TEST(MirrorArgmin, EuclideanFeasibleAnchorIsFixed) {
  const Geometry geom = Geometry::Euclidean(2, 2);
  const Point z1 = Point::FromBlocks(Eigen::Vector2d(0.3, 0.7), Eigen::Vector2d(0.5, 0.5));
  Point primal(2, 2), dual(2, 2);
  MirrorArgmin(geom, SimplexIndicator{}, Point(2, 2), 1.0, 0.5, z1, Point(2, 2),
               primal, dual);
  EXPECT_LE(MaxAbsDiff(primal, z1), 1e-16);
}

TEST(MirrorArgmin, EntropicHandComputedSoftmax) {
  const Geometry geom = Geometry::EntropicSimplex(2, 1);
  const Point z1 = Point::FromBlocks(Eigen::Vector2d(0.5, 0.5), Eigen::VectorXd::Ones(1));
  const DualVector lin = Point::FromBlocks(Eigen::Vector2d(std::log(2.0), 0.0),
                                           Eigen::VectorXd::Zero(1));
  Point primal(2, 1), dual(2, 1);
  MirrorArgmin(geom, SimplexIndicator{}, lin, 1.0, 1.0, MirrorMap(geom, z1),
               MirrorMap(geom, z1), primal, dual);
  EXPECT_NEAR(primal.x()[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(primal.x()[1], 2.0 / 3.0, 1e-15);
}

TEST(MirrorArgmin, ZeroWeightOnFirstAnchorReturnsSecond) {
  Rng rng(4);
  const Geometry geom = Geometry::EntropicSimplex(3, 4);
  const Point z1 = testing::RandomSimplexPoint(rng, 3, 4);
  const Point z2 = testing::RandomSimplexPoint(rng, 3, 4);
  Point primal(3, 4), dual(3, 4);
  MirrorArgmin(geom, SimplexIndicator{}, Point(3, 4), 0.0, 0.3,
               MirrorMap(geom, z1), MirrorMap(geom, z2), primal, dual);
  EXPECT_LE(MaxAbsDiff(primal, z2), 1e-14);
}

TEST(MirrorArgmin, EntropicNeedsSimplexIndicator) {
  const Geometry geom = Geometry::EntropicSimplex(2, 2);
  Point primal(2, 2), dual(2, 2);
  EXPECT_THROW(MirrorArgmin(geom, Unconstrained{}, Point(2, 2), 1.0, 1.0,
                            Point(2, 2), Point(2, 2), primal, dual),
               ConfigError);
}

// The entropic step minimizes tau <lin, z> + alpha D(z, z1) + (1 - alpha) D(z, z2)
// on the simplex product; compare against random feasible competitors.
TEST(MirrorArgmin, PropertyEntropicStepIsOptimal) {
  Rng rng(5);
  const Geometry geom = Geometry::EntropicSimplex(3, 3);
  for (int t = 0; t < 100; ++t) {
    const Point z1 = testing::RandomSimplexPoint(rng, 3, 3);
    const Point z2 = testing::RandomSimplexPoint(rng, 3, 3);
    const DualVector lin = RandomPoint(rng, 3, 3);
    const double alpha = rng.Uniform(), tau = 0.1 + rng.Uniform();
    Point primal(3, 3), dual(3, 3);
    MirrorArgmin(geom, SimplexIndicator{}, lin, alpha, tau, MirrorMap(geom, z1),
                 MirrorMap(geom, z2), primal, dual);
    auto objective = [&](const Point& z) {
      return tau * lin.coords().dot(z.coords()) +
             alpha * BregmanDivergence(geom, z, z1) +
             (1 - alpha) * BregmanDivergence(geom, z, z2);
    };
    const double best = objective(primal);
    for (int k = 0; k < 20; ++k) {
      EXPECT_LE(best, objective(testing::RandomSimplexPoint(rng, 3, 3)) + 1e-12);
    }
  }
}

}  // namespace
}  // namespace vrvi
