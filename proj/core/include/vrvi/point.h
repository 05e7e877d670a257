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

#ifndef VRVI_POINT_H_
#define VRVI_POINT_H_

#include <Eigen/Core>

namespace vrvi {

// A joint primal-dual vector z = (x, y). Coordinates are stored contiguously;
// the first x_dim() entries form the x block and the remaining y_dim() entries
// the y block. Dual vectors (operator values, mirror-map images) use the same
// layout.
class Point {
 public:
  Point() = default;
  // Zero point with blocks of size x_dim and y_dim (both >= 1).
  Point(Eigen::Index x_dim, Eigen::Index y_dim);
  Point(Eigen::VectorXd coords, Eigen::Index x_dim);

  static Point FromBlocks(const Eigen::Ref<const Eigen::VectorXd>& x,
                          const Eigen::Ref<const Eigen::VectorXd>& y);

  Eigen::Index x_dim() const { return x_dim_; }
  Eigen::Index y_dim() const { return coords_.size() - x_dim_; }
  Eigen::Index dim() const { return coords_.size(); }

  auto x() { return coords_.head(x_dim_); }
  auto x() const { return coords_.head(x_dim_); }
  auto y() { return coords_.tail(coords_.size() - x_dim_); }
  auto y() const { return coords_.tail(coords_.size() - x_dim_); }

  Eigen::VectorXd& coords() { return coords_; }
  const Eigen::VectorXd& coords() const { return coords_; }

  bool SameShape(const Point& other) const {
    return x_dim_ == other.x_dim_ && dim() == other.dim();
  }
  bool AllFinite() const { return coords_.allFinite(); }

  void SetZero() { coords_.setZero(); }

 private:
  Eigen::VectorXd coords_;
  Eigen::Index x_dim_ = 0;
};

using DualVector = Point;

// Throws InvalidInputError unless the two points have identical block shape.
void CheckSameShape(const Point& a, const Point& b, const char* what);

double SquaredDistance(const Point& a, const Point& b);

}  // namespace vrvi

#endif  // VRVI_POINT_H_
