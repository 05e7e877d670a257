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


#ifndef VRVI_BILINEAR_ORACLE_H_
#define VRVI_BILINEAR_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "vrvi/matrix_game.h"
#include "vrvi/oracle.h"
#include "vrvi/sampler.h"

namespace vrvi {

// Row/column sampling schemes for F(x, y) = (A^T y, -A x). Every outcome
// xi = (i, j) has F_xi(z) = (A_{i:}^T y_i / r_i, -A_{:j} x_j / c_j) with
// Pr{xi = (i, j)} = r_i c_j.
enum class SamplingScheme {
  // r_i = |A_{i:}|^2 / |A|_F^2, c_j = |A_{:j}|^2 / |A|_F^2; L = |A|_F.
  kFixedRowColNorms,
  // r_i ~ |u^y_i - v^y_i|^2, c_j ~ |u^x_j - v^x_j|^2; L = |A|_F.
  kVariableEuclidean,
  // r_i ~ |u^y_i - v^y_i|, c_j ~ |u^x_j - v^x_j|; L = |A|_max in the l1 pair.
  kVariableEntropic,
};

const char* SchemeName(SamplingScheme scheme);

class BilinearOracle : public StochasticOracle {
 public:
  using StochasticOracle::Component;
  using StochasticOracle::Full;

  BilinearOracle(std::shared_ptr<const MatrixGame> game, SamplingScheme scheme);

  Eigen::Index x_dim() const override { return game_->cols(); }
  Eigen::Index y_dim() const override { return game_->rows(); }
  std::string name() const override { return SchemeName(scheme_); }

  void Full(const Point& z, DualVector& out) const override;
  void Component(const ComponentIndex& idx, const Point& z,
                 DualVector& out) const override;
  void AddComponentDifference(const ComponentIndex& idx, const Point& u,
                              const Point& v, double scale,
                              DualVector& out) const override;

  // For variable schemes a block whose difference vanishes falls back to the
  // fixed row/column-norm marginal; without anchors both blocks fall back.
  SamplingPlan Plan(const Point* u, const Point* v,
                    PlanScratch& scratch) const override;

  bool is_variable() const override {
    return scheme_ != SamplingScheme::kFixedRowColNorms;
  }
  double lipschitz() const override;
  NormPairing norms() const override {
    return scheme_ == SamplingScheme::kVariableEntropic
               ? NormPairing::kEntropicL1
               : NormPairing::kEuclidean;
  }
  double full_cost() const override {
    return static_cast<double>(game_->nnz());
  }
  double sample_cost() const override {
    return static_cast<double>(game_->rows() + game_->cols());
  }

  SamplingScheme scheme() const { return scheme_; }
  const MatrixGame& game() const { return *game_; }
  const DiscreteSampler& fixed_rows() const { return fixed_rows_; }
  const DiscreteSampler& fixed_cols() const { return fixed_cols_; }

  // Number of single-row / single-column reads since construction or the
  // last reset. Component evaluations touch one of each.
  int64_t row_reads() const { return row_reads_.load(std::memory_order_relaxed); }
  int64_t col_reads() const { return col_reads_.load(std::memory_order_relaxed); }
  void ResetCounters() const {
    row_reads_.store(0, std::memory_order_relaxed);
    col_reads_.store(0, std::memory_order_relaxed);
  }

 private:
  // out.x += a * A_{i:}^T and out.y -= b * A_{:j}.
  void Accumulate(Eigen::Index i, Eigen::Index j, double a, double b,
                  DualVector& out) const;

  std::shared_ptr<const MatrixGame> game_;
  SamplingScheme scheme_;
  DiscreteSampler fixed_rows_;
  DiscreteSampler fixed_cols_;
  mutable std::atomic<int64_t> row_reads_{0};
  mutable std::atomic<int64_t> col_reads_{0};
};

}  // namespace vrvi

#endif  // VRVI_BILINEAR_ORACLE_H_
