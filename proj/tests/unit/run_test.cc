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


#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "vrvi/generators.h"
#include "vrvi/problems.h"
#include "vrvi/run.h"

namespace vrvi {
namespace {

VIProblem Gaussian(int n, uint64_t seed) {
  return MakeMatrixGame(GaussianMatrix(n, n, seed), GeometryKind::kEuclidean,
                        SamplingScheme::kFixedRowColNorms);
}

bool SameRows(const RunTrace& a, const RunTrace& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (size_t k = 0; k < a.rows.size(); ++k) {
    if (a.rows[k].cost != b.rows[k].cost || a.rows[k].gap != b.rows[k].gap ||
        a.rows[k].epoch != b.rows[k].epoch) {
      return false;
    }
  }
  return true;
}

TEST(Run, SameSeedSameTrace) {
  const VIProblem p = Gaussian(20, 1);
  for (Algorithm a : {Algorithm::kVrEg, Algorithm::kVrMp, Algorithm::kVrFbf,
                      Algorithm::kVrForb, Algorithm::kDetEg}) {
    SolverConfig c;
    c.algorithm = a;
    c.seed = 9;
    c.budget_epochs = 20;
    EXPECT_TRUE(SameRows(vrvi::Run(p, c), vrvi::Run(p, c))) << AlgorithmName(a);
  }
  SolverConfig c;
  c.budget_epochs = 20;
  c.seed = 1;
  const RunTrace t1 = vrvi::Run(p, c);
  c.seed = 2;
  EXPECT_FALSE(SameRows(t1, vrvi::Run(p, c)));
}

TEST(Run, TinyBudgetStillRecordsInitialRow) {
  const VIProblem p = Gaussian(10, 2);
  SolverConfig c;
  c.budget_epochs = 0.5;
  const RunTrace t = vrvi::Run(p, c);
  ASSERT_GE(t.rows.size(), 1u);
  EXPECT_EQ(t.rows.front().cost, 0.0);
  EXPECT_EQ(t.epoch_unit, static_cast<double>(p.matrix->nnz()));
}

TEST(Run, RowsAreSpacedByEvalInterval) {
  const VIProblem p = Gaussian(10, 3);
  SolverConfig c;
  c.budget_epochs = 5;
  c.eval_every_epochs = 1;
  const RunTrace t = vrvi::Run(p, c);
  // A row is written after the first iteration that crosses a mark; one
  // iteration costs at most two samples plus a snapshot pass.
  const double step = (2.0 * p.oracle->sample_cost() + p.oracle->full_cost()) /
                      t.epoch_unit;
  // An iteration may jump over a mark, so rows sit on distinct marks rather
  // than one per mark.
  for (size_t k = 1; k < t.rows.size(); ++k) {
    EXPECT_GT(std::floor(t.rows[k].epoch), std::floor(t.rows[k - 1].epoch));
    EXPECT_LE(t.rows[k].epoch - t.rows[k - 1].epoch, 1.0 + step + 1e-12);
  }
  EXPECT_GE(t.rows.back().epoch, 5.0);
}

TEST(Run, KnownSolutionGivesDistance) {
  const VIProblem p = MakeStronglyConvexBilinear(4, 1.0, 1.0);
  SolverConfig c;
  c.budget_epochs = 3;
  const RunTrace t = vrvi::Run(p, c);
  ASSERT_TRUE(t.rows.front().dist_sq);
  EXPECT_DOUBLE_EQ(*t.rows.front().dist_sq, 8.0);
}

TEST(Run, TargetGapStopsEarly) {
  const VIProblem p = Gaussian(20, 4);
  SolverConfig c;
  c.budget_epochs = 500;
  c.target_gap = 0.05;
  const RunTrace t = vrvi::Run(p, c);
  EXPECT_LE(t.rows.back().gap, 0.05);
  EXPECT_LT(t.rows.back().epoch, 500);
}

TEST(Run, ObserverCanStop) {
  const VIProblem p = Gaussian(10, 5);
  SolverConfig c;
  c.budget_epochs = 100;
  const RunTrace t = vrvi::Run(p, c, [](const SolverState& s) { return s.iterations < 7; });
  EXPECT_EQ(t.iterations, 7);
}

TEST(Run, NumericFailureLeavesPartialTrace) {
  VIProblem p = Gaussian(6, 6);
  SolverConfig c;
  c.algorithm = Algorithm::kVrFbf;
  c.tau = 1e300;
  c.enforce_step_bound = false;
  c.budget_epochs = 50;
  c.eval_every_epochs = 0.01;
  const RunTrace t = vrvi::Run(p, c);
  EXPECT_TRUE(t.numeric_failure);
  EXPECT_FALSE(t.failure_message.empty());
  EXPECT_GE(t.rows.size(), 1u);
}

}  // namespace
}  // namespace vrvi
