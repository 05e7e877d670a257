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


#ifndef VRVI_ORACLE_H_
#define VRVI_ORACLE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vrvi/point.h"
#include "vrvi/rng.h"
#include "vrvi/sampler.h"

namespace vrvi {

// One outcome xi of a stochastic oracle. For matrix games (row, col) selects
// A_{row:} and A_{:col}; for finite sums `row` is the component and `col` is
// unused. Scales are inverse selection probabilities.
struct ComponentIndex {
  size_t row = 0;
  size_t col = 0;
  double row_scale = 1.0;
  double col_scale = 1.0;
};

// A distribution over component indices: either a single atom (exact
// oracles), a single marginal (finite sums), or a product of a row marginal
// and a column marginal (matrix games). Samplers are borrowed.
class SamplingPlan {
 public:
  SamplingPlan() = default;  // single atom
  explicit SamplingPlan(const DiscreteSampler* rows,
                        const DiscreteSampler* cols = nullptr)
      : rows_(rows), cols_(cols) {}

  size_t support_size() const;
  // Enumeration of the support in row-major order.
  double probability(size_t k) const;
  ComponentIndex component(size_t k) const;
  // Consumes one uniform for the row and, if present, one for the column.
  ComponentIndex Draw(Rng& rng) const;

 private:
  const DiscreteSampler* rows_ = nullptr;
  const DiscreteSampler* cols_ = nullptr;
};

// Caller-owned storage for state-dependent distributions, so that oracles
// themselves stay immutable and shareable across threads.
struct PlanScratch {
  DiscreteSampler rows;
  DiscreteSampler cols;
  std::vector<double> weights;
};

// Source of the per-iteration randomness: the component index, then the
// snapshot coin.
class DrawSource {
 public:
  virtual ~DrawSource() = default;
  virtual ComponentIndex DrawIndex(const SamplingPlan& plan) = 0;
  virtual bool Coin(double p) = 0;
};

class RngDrawSource : public DrawSource {
 public:
  explicit RngDrawSource(Rng& rng) : rng_(rng) {}
  ComponentIndex DrawIndex(const SamplingPlan& plan) override {
    return plan.Draw(rng_);
  }
  bool Coin(double p) override { return rng_.Bernoulli(p); }

 private:
  Rng& rng_;
};

// Replays a fixed outcome. Used to enumerate branches exactly.
class ForcedDrawSource : public DrawSource {
 public:
  ForcedDrawSource(size_t support_position, bool coin)
      : position_(support_position), coin_(coin) {}
  ComponentIndex DrawIndex(const SamplingPlan& plan) override {
    return plan.component(position_);
  }
  bool Coin(double) override { return coin_; }

 private:
  size_t position_;
  bool coin_;
};

// Which norm pair the mean-Lipschitz constant refers to.
enum class NormPairing {
  kEuclidean,   // l2 / l2
  kEntropicL1,  // sqrt(|x|_1^2 + |y|_1^2) and its dual
};

// An unbiased stochastic oracle F_xi for an operator F on Z = R^n x R^m.
class StochasticOracle {
 public:
  virtual ~StochasticOracle() = default;

  virtual Eigen::Index x_dim() const = 0;
  virtual Eigen::Index y_dim() const = 0;
  virtual std::string name() const = 0;

  // out = F(z).
  virtual void Full(const Point& z, DualVector& out) const = 0;
  // out = F_xi(z).
  virtual void Component(const ComponentIndex& idx, const Point& z,
                         DualVector& out) const = 0;
  // out += scale * (F_xi(u) - F_xi(v)).
  virtual void AddComponentDifference(const ComponentIndex& idx,
                                      const Point& u, const Point& v,
                                      double scale, DualVector& out) const = 0;

  // The distribution of xi. Variable oracles use the anchor pair (u, v) and
  // may write into `scratch`; the returned plan borrows from it. Fixed
  // oracles ignore the anchors.
  virtual SamplingPlan Plan(const Point* u, const Point* v,
                            PlanScratch& scratch) const = 0;

  virtual bool is_variable() const { return false; }
  // True when F_xi == F for every xi (the deterministic limit).
  virtual bool is_exact() const { return false; }
  virtual double lipschitz() const = 0;
  virtual NormPairing norms() const { return NormPairing::kEuclidean; }

  // Cost of one F evaluation (the epoch unit) and of one F_xi evaluation,
  // in a common unit.
  virtual double full_cost() const = 0;
  virtual double sample_cost() const = 0;
  // Default snapshot probability p: sample_cost / full_cost, clamped to 1.
  double default_snapshot_probability() const;

  DualVector Full(const Point& z) const;
  DualVector Component(const ComponentIndex& idx, const Point& z) const;
};

// Wraps any oracle as its deterministic limit: a single atom with F_xi = F,
// charged at full cost.
class ExactOracle : public StochasticOracle {
 public:
  using StochasticOracle::Component;
  using StochasticOracle::Full;

  explicit ExactOracle(std::shared_ptr<const StochasticOracle> base,
                       double lipschitz);

  Eigen::Index x_dim() const override { return base_->x_dim(); }
  Eigen::Index y_dim() const override { return base_->y_dim(); }
  std::string name() const override { return "full"; }
  void Full(const Point& z, DualVector& out) const override {
    base_->Full(z, out);
  }
  void Component(const ComponentIndex&, const Point& z,
                 DualVector& out) const override {
    base_->Full(z, out);
  }
  void AddComponentDifference(const ComponentIndex& idx, const Point& u,
                              const Point& v, double scale,
                              DualVector& out) const override;
  SamplingPlan Plan(const Point*, const Point*, PlanScratch&) const override {
    return SamplingPlan();
  }
  bool is_exact() const override { return true; }
  double lipschitz() const override { return lipschitz_; }
  NormPairing norms() const override { return base_->norms(); }
  double full_cost() const override { return base_->full_cost(); }
  double sample_cost() const override { return base_->full_cost(); }

 private:
  std::shared_ptr<const StochasticOracle> base_;
  double lipschitz_;
};

// Multiplies every F_xi (but not F) by `factor`. Only meant for mutation
// testing of the verification suites.
class BiasedOracle : public StochasticOracle {
 public:
  using StochasticOracle::Component;
  using StochasticOracle::Full;

  BiasedOracle(std::shared_ptr<const StochasticOracle> base, double factor)
      : base_(std::move(base)), factor_(factor) {}

  Eigen::Index x_dim() const override { return base_->x_dim(); }
  Eigen::Index y_dim() const override { return base_->y_dim(); }
  std::string name() const override { return base_->name() + "+bias"; }
  void Full(const Point& z, DualVector& out) const override {
    base_->Full(z, out);
  }
  void Component(const ComponentIndex& idx, const Point& z,
                 DualVector& out) const override {
    base_->Component(idx, z, out);
    out.coords() *= factor_;
  }
  void AddComponentDifference(const ComponentIndex& idx, const Point& u,
                              const Point& v, double scale,
                              DualVector& out) const override {
    base_->AddComponentDifference(idx, u, v, scale * factor_, out);
  }
  SamplingPlan Plan(const Point* u, const Point* v,
                    PlanScratch& scratch) const override {
    return base_->Plan(u, v, scratch);
  }
  bool is_variable() const override { return base_->is_variable(); }
  double lipschitz() const override { return base_->lipschitz(); }
  NormPairing norms() const override { return base_->norms(); }
  double full_cost() const override { return base_->full_cost(); }
  double sample_cost() const override { return base_->sample_cost(); }

 private:
  std::shared_ptr<const StochasticOracle> base_;
  double factor_;
};

}  // namespace vrvi

#endif  // VRVI_ORACLE_H_
