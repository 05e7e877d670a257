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


#include "vrvi/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "vrvi/errors.h"
#include "vrvi/rng.h"

namespace vrvi {

double SpectralNorm(const Eigen::MatrixXd& a, int max_iterations,
                    double rel_tol) {
  if (a.size() == 0) return 0.0;
  Rng rng(0x9e3779b97f4a7c15ULL);
  Eigen::VectorXd v(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 0.5 + rng.Uniform();
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd av = a * v;
    Eigen::VectorXd atav = a.transpose() * av;
    const double norm = atav.norm();
    if (norm == 0.0) return 0.0;
    const double next = std::sqrt(norm);
    v = atav / norm;
    const bool done = std::abs(next - sigma) <= rel_tol * next;
    sigma = next;
    if (done) break;
  }
  // Rayleigh quotient on the final vector.
  return std::max(sigma, (a * v).norm());
}

MatrixGame::MatrixGame(const Eigen::MatrixXd& a) : by_row_(a), by_col_(a) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw InvalidInputError("MatrixGame: matrix must be at least 1 x 1");
  }
  if (!a.allFinite()) {
    throw InvalidInputError("MatrixGame: matrix has non-finite entries");
  }
  if (a.rows() > std::numeric_limits<uint32_t>::max() ||
      a.cols() > std::numeric_limits<uint32_t>::max()) {
    throw InvalidInputError("MatrixGame: matrix too large");
  }
  const Eigen::Index m = a.rows(), n = a.cols();
  row_ptr_.assign(m + 1, 0);
  col_ptr_.assign(n + 1, 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (by_row_(i, j) != 0.0) {
        row_idx_.push_back(static_cast<uint32_t>(j));
        ++col_ptr_[j + 1];
      }
    }
    row_ptr_[i + 1] = static_cast<int64_t>(row_idx_.size());
  }
  nnz_ = static_cast<int64_t>(row_idx_.size());
  for (Eigen::Index j = 0; j < n; ++j) col_ptr_[j + 1] += col_ptr_[j];
  col_idx_.resize(row_idx_.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    int64_t k = col_ptr_[j];
    for (Eigen::Index i = 0; i < m; ++i) {
      if (by_col_(i, j) != 0.0) col_idx_[k++] = static_cast<uint32_t>(i);
    }
  }
  sparse_ = 4 * nnz_ < m * n;
  row_sq_ = by_row_.rowwise().squaredNorm();
  col_sq_ = by_col_.colwise().squaredNorm().transpose();
  frobenius_norm_ = std::sqrt(row_sq_.sum());
  max_norm_ = by_row_.cwiseAbs().maxCoeff();
  spectral_norm_ = SpectralNorm(by_col_);
}

void MatrixGame::Apply(const Eigen::Ref<const Eigen::VectorXd>& x,
                       Eigen::Ref<Eigen::VectorXd> out) const {
  if (x.size() != cols() || out.size() != rows()) {
    throw InvalidInputError("MatrixGame::Apply: dimension mismatch");
  }
  if (!sparse_) {
    out.noalias() = by_row_ * x;
    return;
  }
  for (Eigen::Index i = 0; i < rows(); ++i) {
    double s = 0.0;
    for (const uint32_t* p = row_nonzeros_begin(i); p != row_nonzeros_end(i);
         ++p) {
      s += by_row_(i, *p) * x[*p];
    }
    out[i] = s;
  }
}

void MatrixGame::ApplyTranspose(const Eigen::Ref<const Eigen::VectorXd>& y,
                                Eigen::Ref<Eigen::VectorXd> out) const {
  if (y.size() != rows() || out.size() != cols()) {
    throw InvalidInputError("MatrixGame::ApplyTranspose: dimension mismatch");
  }
  if (!sparse_) {
    out.noalias() = by_col_.transpose() * y;
    return;
  }
  for (Eigen::Index j = 0; j < cols(); ++j) {
    double s = 0.0;
    for (const uint32_t* p = col_nonzeros_begin(j); p != col_nonzeros_end(j);
         ++p) {
      s += by_col_(*p, j) * y[*p];
    }
    out[j] = s;
  }
}

uint64_t MatrixGame::Fingerprint() const {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  };
  const int64_t shape[2] = {rows(), cols()};
  mix(shape, sizeof(shape));
  mix(by_row_.data(), sizeof(double) * by_row_.size());
  return h;
}

}  // namespace vrvi
