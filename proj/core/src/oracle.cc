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


#include "vrvi/oracle.h"

#include <algorithm>
#include <utility>

#include "vrvi/errors.h"

namespace vrvi {

size_t SamplingPlan::support_size() const {
  if (rows_ == nullptr) return 1;
  return rows_->size() * (cols_ == nullptr ? 1 : cols_->size());
}

double SamplingPlan::probability(size_t k) const {
  if (rows_ == nullptr) return 1.0;
  if (cols_ == nullptr) return rows_->probability(k);
  const size_t nc = cols_->size();
  return rows_->probability(k / nc) * cols_->probability(k % nc);
}

ComponentIndex SamplingPlan::component(size_t k) const {
  ComponentIndex idx;
  if (rows_ == nullptr) return idx;
  const size_t nc = cols_ == nullptr ? 1 : cols_->size();
  idx.row = k / nc;
  idx.row_scale = 1.0 / rows_->probability(idx.row);
  if (cols_ != nullptr) {
    idx.col = k % nc;
    idx.col_scale = 1.0 / cols_->probability(idx.col);
  }
  return idx;
}

ComponentIndex SamplingPlan::Draw(Rng& rng) const {
  ComponentIndex idx;
  if (rows_ == nullptr) return idx;
  idx.row = rows_->Sample(rng);
  idx.row_scale = 1.0 / rows_->probability(idx.row);
  if (cols_ != nullptr) {
    idx.col = cols_->Sample(rng);
    idx.col_scale = 1.0 / cols_->probability(idx.col);
  }
  return idx;
}

double StochasticOracle::default_snapshot_probability() const {
  return std::min(1.0, sample_cost() / full_cost());
}

DualVector StochasticOracle::Full(const Point& z) const {
  DualVector out(x_dim(), y_dim());
  Full(z, out);
  return out;
}

DualVector StochasticOracle::Component(const ComponentIndex& idx,
                                       const Point& z) const {
  DualVector out(x_dim(), y_dim());
  Component(idx, z, out);
  return out;
}

ExactOracle::ExactOracle(std::shared_ptr<const StochasticOracle> base,
                         double lipschitz)
    : base_(std::move(base)), lipschitz_(lipschitz) {
  if (base_ == nullptr) throw InvalidInputError("ExactOracle: null base");
  if (!(lipschitz > 0.0)) {
    throw InvalidInputError("ExactOracle: Lipschitz constant must be > 0");
  }
}

void ExactOracle::AddComponentDifference(const ComponentIndex&,
                                         const Point& u, const Point& v,
                                         double scale, DualVector& out) const {
  DualVector fu = base_->Full(u);
  DualVector fv = base_->Full(v);
  out.coords() += scale * (fu.coords() - fv.coords());
}

}  // namespace vrvi
