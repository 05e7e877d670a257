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


#include "vrvi/bilinear_oracle.h"

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "vrvi/errors.h"

namespace vrvi {
namespace {

// Marginal proportional to squared norms; uniform if the matrix is zero.
DiscreteSampler NormMarginal(const Eigen::VectorXd& sq) {
  std::vector<double> w(sq.data(), sq.data() + sq.size());
  if (sq.sum() == 0.0) w.assign(w.size(), 1.0);
  return DiscreteSampler(w, DiscreteSampler::Method::kAlias);
}

// Fills `sampler` with weights |d_k|^power; returns false if d == 0.
bool DifferenceMarginal(const Eigen::Ref<const Eigen::VectorXd>& d, int power,
                        std::vector<double>& weights,
                        DiscreteSampler& sampler) {
  weights.resize(d.size());
  double total = 0.0;
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    const double a = std::abs(d[k]);
    weights[k] = power == 2 ? a * a : a;
    total += weights[k];
  }
  if (!(total > 0.0)) return false;
  sampler.Build(weights, DiscreteSampler::Method::kPrefixSum);
  return true;
}

}  // namespace

const char* SchemeName(SamplingScheme scheme) {
  switch (scheme) {
    case SamplingScheme::kFixedRowColNorms:
      return "fixed";
    case SamplingScheme::kVariableEuclidean:
      return "variable-euclidean";
    case SamplingScheme::kVariableEntropic:
      return "variable-entropic";
  }
  return "unknown";
}

BilinearOracle::BilinearOracle(std::shared_ptr<const MatrixGame> game,
                               SamplingScheme scheme)
    : game_(std::move(game)), scheme_(scheme) {
  if (game_ == nullptr) throw InvalidInputError("BilinearOracle: null game");
  Eigen::VectorXd rsq(game_->rows()), csq(game_->cols());
  for (Eigen::Index i = 0; i < rsq.size(); ++i) {
    rsq[i] = game_->row_squared_norm(i);
  }
  for (Eigen::Index j = 0; j < csq.size(); ++j) {
    csq[j] = game_->col_squared_norm(j);
  }
  fixed_rows_ = NormMarginal(rsq);
  fixed_cols_ = NormMarginal(csq);
}

double BilinearOracle::lipschitz() const {
  return scheme_ == SamplingScheme::kVariableEntropic ? game_->max_norm()
                                                      : game_->frobenius_norm();
}

void BilinearOracle::Full(const Point& z, DualVector& out) const {
  if (z.x_dim() != x_dim() || z.y_dim() != y_dim()) {
    throw InvalidInputError("BilinearOracle::Full: dimension mismatch");
  }
  if (!out.SameShape(z)) out = DualVector(x_dim(), y_dim());
  game_->ApplyTranspose(z.y(), out.x());
  game_->Apply(z.x(), out.y());
  out.y() = -out.y();
}

void BilinearOracle::Component(const ComponentIndex& idx, const Point& z,
                               DualVector& out) const {
  const auto i = static_cast<Eigen::Index>(idx.row);
  const auto j = static_cast<Eigen::Index>(idx.col);
  const double a = idx.row_scale * z.y()[i];
  const double b = idx.col_scale * z.x()[j];
  if (!out.SameShape(z)) out = DualVector(x_dim(), y_dim());
  out.SetZero();
  Accumulate(i, j, a, b, out);
}

void BilinearOracle::AddComponentDifference(const ComponentIndex& idx,
                                            const Point& u, const Point& v,
                                            double scale,
                                            DualVector& out) const {
  const auto i = static_cast<Eigen::Index>(idx.row);
  const auto j = static_cast<Eigen::Index>(idx.col);
  // By linearity F_xi(u) - F_xi(v) = F_xi(u - v), one row and one column.
  const double a = scale * idx.row_scale * (u.y()[i] - v.y()[i]);
  const double b = scale * idx.col_scale * (u.x()[j] - v.x()[j]);
  Accumulate(i, j, a, b, out);
}

void BilinearOracle::Accumulate(Eigen::Index i, Eigen::Index j, double a,
                                double b, DualVector& out) const {
  row_reads_.fetch_add(1, std::memory_order_relaxed);
  col_reads_.fetch_add(1, std::memory_order_relaxed);
  if (game_->prefers_sparse_access()) {
    const auto& r = game_->by_row();
    for (const uint32_t* p = game_->row_nonzeros_begin(i);
         p != game_->row_nonzeros_end(i); ++p) {
      out.x()[*p] += a * r(i, *p);
    }
    const auto& c = game_->by_col();
    for (const uint32_t* p = game_->col_nonzeros_begin(j);
         p != game_->col_nonzeros_end(j); ++p) {
      out.y()[*p] -= b * c(*p, j);
    }
    return;
  }
  if (a != 0.0) out.x().noalias() += a * game_->by_row().row(i).transpose();
  if (b != 0.0) out.y().noalias() -= b * game_->by_col().col(j);
}

SamplingPlan BilinearOracle::Plan(const Point* u, const Point* v,
                                  PlanScratch& scratch) const {
  if (scheme_ == SamplingScheme::kFixedRowColNorms || u == nullptr ||
      v == nullptr) {
    return SamplingPlan(&fixed_rows_, &fixed_cols_);
  }
  const int power = scheme_ == SamplingScheme::kVariableEuclidean ? 2 : 1;
  const bool rows_ok = DifferenceMarginal(u->y() - v->y(), power,
                                          scratch.weights, scratch.rows);
  const bool cols_ok = DifferenceMarginal(u->x() - v->x(), power,
                                          scratch.weights, scratch.cols);
  return SamplingPlan(rows_ok ? &scratch.rows : &fixed_rows_,
                      cols_ok ? &scratch.cols : &fixed_cols_);
}

}  // namespace vrvi
