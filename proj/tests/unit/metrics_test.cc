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
#include <limits>

#include <gtest/gtest.h>

#include "test_util.h"
#include "vrvi/errors.h"
#include "vrvi/generators.h"
#include "vrvi/metrics.h"
#include "vrvi/problems.h"
#include "vrvi/solvers.h"

namespace vrvi {
namespace {

// max over vertex pairs (e_i, e_j) of <F(u), z - u>; linear in u, so this
// is the gap over the whole simplex product.
double VertexEnumerationGap(const Eigen::MatrixXd& a, const Point& z) {
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      // u = (e_j, e_i): F(u) = (A^T e_i, -A e_j)
      const double v = a.row(i).dot(z.x()) - a.col(j).dot(z.y());
      best = std::max(best, v);
    }
  }
  return best;
}

TEST(SimplexDualityGap, MatchingPenniesPoints) {
  const MatrixGame g(MatchingPenniesMatrix());
  const Point uniform = Point::FromBlocks(Eigen::Vector2d(0.5, 0.5), Eigen::Vector2d(0.5, 0.5));
  EXPECT_EQ(SimplexDualityGap(g, uniform), 0.0);
  const Point corner = Point::FromBlocks(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1));
  EXPECT_DOUBLE_EQ(SimplexDualityGap(g, corner), 2.0);
}

TEST(SimplexDualityGap, RockPaperScissorsUniform) {
  const MatrixGame g(RockPaperScissorsMatrix());
  const Point uniform(Eigen::VectorXd::Constant(6, 1.0 / 3), 3);
  EXPECT_LE(SimplexDualityGap(g, uniform), 1e-16);
}

TEST(SimplexDualityGap, RejectsPointsOffTheSimplex) {
  const MatrixGame g(MatchingPenniesMatrix());
  EXPECT_THROW(SimplexDualityGap(g, Point(Eigen::Vector4d(1, 1, 0.5, 0.5), 2)),
               InvalidInputError);
}

TEST(SimplexDualityGap, PropertyMatchesVertexEnumeration) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const Eigen::MatrixXd a = testing::RandomMatrix(rng, 1 + t % 5, 1 + t % 4);
    const Point z = testing::RandomSimplexPoint(rng, a.cols(), a.rows());
    const double gap = SimplexDualityGap(MatrixGame(a), z);
    EXPECT_NEAR(gap, VertexEnumerationGap(a, z), 1e-12);
    EXPECT_GE(gap, 0.0);
  }
}

TEST(RestrictedGap, EqualsDualityGapWhenBallCoversSimplices) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Eigen::MatrixXd a = testing::RandomMatrix(rng, 2 + t % 4, 2 + t % 3);
    const VIProblem p = MakeMatrixGame(a, GeometryKind::kEuclidean,
                                       SamplingScheme::kFixedRowColNorms);
    const Point z = testing::RandomSimplexPoint(rng, a.cols(), a.rows());
    EXPECT_NEAR(RestrictedGap(p, z, 2.0), SimplexDualityGap(*p.matrix, z), 1e-12);
  }
}

TEST(RestrictedGap, ZeroBudgetUsesOnlyTheInitialPoint) {
  Rng rng(3);
  const Eigen::MatrixXd a = testing::RandomMatrix(rng, 3, 3);
  VIProblem p = MakeMatrixGame(a, GeometryKind::kEuclidean,
                               SamplingScheme::kFixedRowColNorms);
  p.known_solution.reset();
  const Point z = testing::RandomSimplexPoint(rng, 3, 3);
  const Point& z0 = p.initial_point;
  const double expect = std::max(
      0.0, p.oracle->Full(z0).coords().dot(z.coords() - z0.coords()));
  EXPECT_DOUBLE_EQ(RestrictedGap(p, z, 1.0, 0), expect);
}

TEST(RestrictedGap, MonotoneInRadiusAndZeroAtSolution) {
  const VIProblem p = MakeStronglyConvexBilinear(4, 0.5, 1.0);
  Rng rng(4);
  const Point z = testing::RandomPoint(rng, 4, 4);
  double prev = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double g = RestrictedGap(p, z, r);
    EXPECT_GE(g, prev);
    prev = g;
  }
  EXPECT_EQ(RestrictedGap(p, *p.known_solution, 3.0), 0.0);
}

TEST(NaturalResidual, ZeroExactlyAtSolution) {
  const VIProblem p = MakeStronglyConvexBilinear(4, 1.0, 2.0);
  EXPECT_EQ(NaturalResidual(p, *p.known_solution), 0.0);
  EXPECT_GT(NaturalResidual(p, p.initial_point), 0.0);
}

TEST(EvaluateGap, DispatchesAndClips) {
  const VIProblem p = MakeMatchingPennies(GeometryKind::kEuclidean,
                                          SamplingScheme::kFixedRowColNorms);
  int64_t clipped = 0;
  EXPECT_EQ(EvaluateGap(p, *p.known_solution, &clipped), 0.0);
  EXPECT_EQ(clipped, 0);
}

TEST(LyapunovPhi, ZeroAtSolutionAndReducesToSnapshotDistance) {
  const VIProblem p = MakeMatchingPennies(GeometryKind::kEuclidean,
                                          SamplingScheme::kFixedRowColNorms);
  SolverConfig c;
  c.p = 1.0;
  c.alpha = 0.0;
  c.tau = 0.1;
  SolverState s = InitState(p, ResolveParameters(p, c));
  const Point& star = *p.known_solution;
  EXPECT_EQ(LyapunovPhi(LyapunovKind::kEgFbf, s, p, star), 0.0);
  s.z = Point(Eigen::Vector4d(1, 0, 0, 1), 2);
  s.w = Point(Eigen::Vector4d(0.7, 0.3, 0.4, 0.6), 2);
  EXPECT_NEAR(LyapunovPhi(LyapunovKind::kEgFbf, s, p, star),
              SquaredDistance(s.w, star), 1e-16);
}

TEST(LyapunovPhi, ForbTermsByHand) {
  const VIProblem p = MakeMatchingPennies(GeometryKind::kEuclidean,
                                          SamplingScheme::kFixedRowColNorms);
  SolverConfig c;
  c.algorithm = Algorithm::kVrForb;
  c.p = 0.5;
  c.tau = 0.1;
  SolverState s = InitState(p, ResolveParameters(p, c));
  s.z = Point(Eigen::Vector4d(1, 0, 0, 1), 2);
  s.w = Point(Eigen::Vector4d(0.7, 0.3, 0.4, 0.6), 2);
  s.w_prev = Point(Eigen::Vector4d(0.2, 0.8, 0.5, 0.5), 2);
  const Point& star = *p.known_solution;
  const double a = s.params.alpha;
  const Eigen::VectorXd df = p.oracle->Full(s.z).coords() - p.oracle->Full(s.w_prev).coords();
  const double expect = a * SquaredDistance(s.z, star) +
                        (1 - a) / 0.5 * SquaredDistance(s.w, star) +
                        2 * 0.1 * df.dot(star.coords() - s.z.coords()) +
                        (1 - a) * SquaredDistance(s.z, s.w_prev);
  EXPECT_NEAR(LyapunovPhi(LyapunovKind::kForb, s, p, star), expect, 1e-15);
}

}  // namespace
}  // namespace vrvi
