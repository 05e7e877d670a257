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


#include "vrvi/finite_sum_oracle.h"

#include <cmath>
#include <utility>

#include "vrvi/errors.h"
#include "vrvi/matrix_game.h"

namespace vrvi {

OperatorComponent AffineComponent(const Eigen::MatrixXd& m,
                                  const Eigen::VectorXd& c) {
  if (m.rows() != m.cols() || c.size() != m.rows()) {
    throw InvalidInputError("AffineComponent: bad dimensions");
  }
  OperatorComponent comp;
  comp.lipschitz = SpectralNorm(m);
  comp.apply = [m, c](const Point& z, DualVector& out) {
    out.coords().noalias() = m * z.coords();
    out.coords() += c;
  };
  return comp;
}

const char* FiniteSumSamplingName(FiniteSumSampling sampling) {
  return sampling == FiniteSumSampling::kUniform ? "uniform" : "importance";
}

FiniteSumOracle::FiniteSumOracle(std::vector<OperatorComponent> components,
                                 Eigen::Index x_dim, Eigen::Index y_dim,
                                 FiniteSumSampling sampling)
    : components_(std::move(components)),
      x_dim_(x_dim),
      y_dim_(y_dim),
      sampling_(sampling) {
  if (components_.empty()) {
    throw InvalidInputError("FiniteSumOracle: no components");
  }
  if (x_dim < 1 || y_dim < 1) {
    throw InvalidInputError("FiniteSumOracle: block dimensions must be >= 1");
  }
  const double n = static_cast<double>(components_.size());
  std::vector<double> weights;
  double sum_l = 0.0, sum_l2 = 0.0;
  for (const auto& c : components_) {
    if (!c.apply) throw InvalidInputError("FiniteSumOracle: missing callback");
    if (!(c.lipschitz >= 0.0) || !std::isfinite(c.lipschitz)) {
      throw InvalidInputError("FiniteSumOracle: bad Lipschitz bound");
    }
    sum_l += c.lipschitz;
    sum_l2 += c.lipschitz * c.lipschitz;
    weights.push_back(c.lipschitz);
  }
  if (sampling == FiniteSumSampling::kImportance && sum_l > 0.0) {
    sampler_.Build(weights, DiscreteSampler::Method::kAlias);
    lipschitz_ = sum_l;
  } else {
    // Importance sampling with all L_i = 0 degenerates to uniform.
    weights.assign(components_.size(), 1.0);
    sampler_.Build(weights, DiscreteSampler::Method::kAlias);
    lipschitz_ = sampling == FiniteSumSampling::kUniform
                     ? std::sqrt(n * sum_l2)
                     : sum_l;
  }
}

std::string FiniteSumOracle::name() const {
  return std::string("finite-sum-") + FiniteSumSamplingName(sampling_);
}

void FiniteSumOracle::Full(const Point& z, DualVector& out) const {
  if (z.x_dim() != x_dim_ || z.y_dim() != y_dim_) {
    throw InvalidInputError("FiniteSumOracle::Full: dimension mismatch");
  }
  DualVector part(x_dim_, y_dim_);
  if (!out.SameShape(z)) out = DualVector(x_dim_, y_dim_);
  out.SetZero();
  for (const auto& c : components_) {
    c.apply(z, part);
    out.coords() += part.coords();
  }
}

void FiniteSumOracle::Component(const ComponentIndex& idx, const Point& z,
                                DualVector& out) const {
  if (!out.SameShape(z)) out = DualVector(x_dim_, y_dim_);
  components_.at(idx.row).apply(z, out);
  out.coords() *= idx.row_scale;
}

void FiniteSumOracle::AddComponentDifference(const ComponentIndex& idx,
                                             const Point& u, const Point& v,
                                             double scale,
                                             DualVector& out) const {
  thread_local DualVector fu, fv;
  if (!fu.SameShape(u)) {
    fu = DualVector(x_dim_, y_dim_);
    fv = DualVector(x_dim_, y_dim_);
  }
  const auto& c = components_.at(idx.row);
  c.apply(u, fu);
  c.apply(v, fv);
  out.coords() += (scale * idx.row_scale) * (fu.coords() - fv.coords());
}

}  // namespace vrvi
