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


#ifndef VRVI_MATRIX_GAME_H_
#define VRVI_MATRIX_GAME_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace vrvi {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Payoff matrix A (m x n) of the game min_x max_y <Ax, y>, stored dense in
// both orders so that a single row or column is contiguous, with nonzero
// index lists and the three norms used for step sizes.
class MatrixGame {
 public:
  explicit MatrixGame(const Eigen::MatrixXd& a);

  Eigen::Index rows() const { return by_row_.rows(); }  // m
  Eigen::Index cols() const { return by_row_.cols(); }  // n
  int64_t nnz() const { return nnz_; }

  const RowMajorMatrix& by_row() const { return by_row_; }
  const Eigen::MatrixXd& by_col() const { return by_col_; }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return by_row_(i, j);
  }

  // Column indices of the nonzeros of row i, and row indices of column j.
  const uint32_t* row_nonzeros_begin(Eigen::Index i) const {
    return row_idx_.data() + row_ptr_[i];
  }
  const uint32_t* row_nonzeros_end(Eigen::Index i) const {
    return row_idx_.data() + row_ptr_[i + 1];
  }
  const uint32_t* col_nonzeros_begin(Eigen::Index j) const {
    return col_idx_.data() + col_ptr_[j];
  }
  const uint32_t* col_nonzeros_end(Eigen::Index j) const {
    return col_idx_.data() + col_ptr_[j + 1];
  }
  // True when the nonzero lists are cheaper than dense rows and columns.
  bool prefers_sparse_access() const { return sparse_; }

  double spectral_norm() const { return spectral_norm_; }
  double frobenius_norm() const { return frobenius_norm_; }
  double max_norm() const { return max_norm_; }
  double row_squared_norm(Eigen::Index i) const { return row_sq_[i]; }
  double col_squared_norm(Eigen::Index j) const { return col_sq_[j]; }

  // out = A x and out = A^T y.
  void Apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> out) const;
  void ApplyTranspose(const Eigen::Ref<const Eigen::VectorXd>& y,
                      Eigen::Ref<Eigen::VectorXd> out) const;

  // FNV-1a hash of the shape and entries, for trace metadata.
  uint64_t Fingerprint() const;

 private:
  RowMajorMatrix by_row_;
  Eigen::MatrixXd by_col_;
  std::vector<int64_t> row_ptr_, col_ptr_;
  std::vector<uint32_t> row_idx_, col_idx_;
  Eigen::VectorXd row_sq_, col_sq_;
  int64_t nnz_ = 0;
  bool sparse_ = false;
  double spectral_norm_ = 0.0;
  double frobenius_norm_ = 0.0;
  double max_norm_ = 0.0;
};

// sigma_max(A) by power iteration on A^T A from a fixed pseudo-random start:
// at most `max_iterations` steps or until the relative change drops below
// `rel_tol`.
double SpectralNorm(const Eigen::MatrixXd& a, int max_iterations = 200,
                    double rel_tol = 1e-8);

}  // namespace vrvi

#endif  // VRVI_MATRIX_GAME_H_
